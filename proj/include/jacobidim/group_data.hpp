#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace jacobidim {

// Branching data of a finite-index subgroup of SL2(Z), which is all the
// dimension formulas ever look at: cusp widths split into regular and
// irregular, the elliptic orbit counts e0 (order 4 fixed points, trace 0)
// and e1 (order 3 or 6 fixed points, trace -1/+1), and whether -1 is in the
// group.  Synthetic schemes are accepted as long as the structural
// invariants below hold; nothing checks that a group realizing them exists.
struct BranchingScheme {
    bool contains_minus_one = false;
    std::vector<std::int64_t> regular_cusp_widths;
    std::vector<std::int64_t> irregular_cusp_widths;
    std::int64_t e0 = 0;
    std::int64_t e1 = 0;

    // Throws std::domain_error naming the violated invariant:
    //  - every cusp width is >= 1 and there is at least one cusp,
    //  - irregular cusps only occur when -1 is absent,
    //  - e0 > 0 requires -1 present,
    //  - e0, e1 >= 0.
    void validate() const;

    // Index in PSL2(Z): the sum of all cusp widths, regular and irregular
    // alike (widths are the periods on the modular curve).
    std::int64_t psl_index() const;

    nlohmann::json to_json() const;
    static BranchingScheme from_json(const nlohmann::json& j);

    friend bool operator==(const BranchingScheme&, const BranchingScheme&) = default;
};

// Gamma(N).  N >= 3 has no -1 and phi(N)*psi(N)/2 regular cusps of width N;
// N = 2 keeps -1 with three cusps of width 2; N = 1 is the full group.
BranchingScheme principal_congruence_scheme(std::int64_t N);

// Gamma_0(N): always contains -1; one cusp orbit per divisor c | N with
// multiplicity phi(gcd(c, N/c)) and width N / gcd(c^2, N); e0, e1 from the
// classical Legendre symbol products.
BranchingScheme gamma0_scheme(std::int64_t N);

// Gamma_1(N): equals Gamma_0(N) for N <= 2; pinned data for N = 3, 4 (the
// N = 4 scheme has one irregular cusp); for N >= 5 torsion free without -1,
// phi(d)*phi(N/d)/2 regular cusps of width N/d per divisor d | N.
BranchingScheme gamma1_scheme(std::int64_t N);

}  // namespace jacobidim
