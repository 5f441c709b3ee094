#pragma once

#include <cstdint>
#include <vector>

#include "jacobidim/group_data.hpp"
#include "jacobidim/rational.hpp"

namespace jacobidim {

// dim S_{k,m}(Gamma) for k >= 3.  For k = 2 every formula below computes the
// same expression, but it then equals that dimension minus the dimension of
// a complementary skew-holomorphic space, so the result is flagged with
// plain = false and may be negative.
struct DimensionResult {
    Rational value;
    bool plain;  // true when the value is the dimension itself (k >= 3)
};

// Torsion-free groups without -1, described by their cusp widths alone.
// Closed form:
//   m * [G1:G] * (2k-3)/24 - sum_b (m/f_b) Q(f_b)
//     - sum_b (2m/f_b) * sum_{D | f_b, D < 0, f_b/D squarefree}
//           (D | b/gcd(4m,b)) * H(D)
// with f_b = 4m / gcd(4m, b) and [G1:G] = 2 * sum_b b.  Arbitrary width
// lists are accepted; for lists not realized by an actual group the result
// can be a non-integer, which is why the exact rational is returned
// unchecked here (the scheme-level entry points below do enforce
// integrality).
DimensionResult dim_theorem1(std::int64_t k, std::int64_t m,
                             const std::vector<std::int64_t>& widths);

// Same dimension written per cusp:  sum_b [ s_top(n=1; b) + (-1)^k * s_par(n=m; b) ].
DimensionResult dim_theorem2(std::int64_t k, std::int64_t m,
                             const std::vector<std::int64_t>& widths);

// Groups containing -1 (all cusps regular):
//   sum_b (1/2) [ s_top(1;b) + (-1)^k s_top(m;b) + s_par(1;b) + (-1)^k s_par(m;b) ]
//     + sum_{t = -1,0,1} (e(t)/2) [ s_ell(1;t) + (-1)^k s_ell(m;t) ]
// with e(0) = e0 and e(-1) = e(+1) = e1.
DimensionResult dim_theorem3(std::int64_t k, std::int64_t m, const BranchingScheme& scheme);

// Groups without -1, allowing irregular cusps; regular cusps contribute as
// in dim_theorem2, irregular ones through the width-doubled combination, and
// elliptic orbits (necessarily of order 3 or 6) through e1.
DimensionResult dim_theorem4(std::int64_t k, std::int64_t m, const BranchingScheme& scheme);

// Dispatch on contains_minus_one to dim_theorem3 / dim_theorem4.
DimensionResult dim_jacobi(std::int64_t k, std::int64_t m, const BranchingScheme& scheme);

// dim S_{k,m}(Gamma(N)) for N >= 3, k >= 3 in closed form, with
// d = gcd(4m, N):
//   phi(N) psi(N) ( m N (2k-3)/24 - (d/8) Q(4m/d)
//                   - (d/4) sum_{D | 4m/d, D < 0, 4m/(d D) squarefree}
//                         (D | N/d) H(D) ).
DimensionResult dim_corollary_gammaN(std::int64_t N, std::int64_t k, std::int64_t m);

// Specialization when 4m | N:  m phi(N) psi(N) (N (2k-3)/24 - 1/2).
DimensionResult dim_gammaN_4m_divides_N(std::int64_t N, std::int64_t k, std::int64_t m);

// Conjectural dimension of the skew space for the full modular group: the
// dim_theorem3 expression at the Gamma(1) scheme with the theorem-level
// (-1)^k factors replaced by -(-1)^k.  Returned raw; it is the correction
// that makes the k = 2 values of the formulas above a genuine dimension.
Rational skew_dim_conjecture(std::int64_t k, std::int64_t m);

}  // namespace jacobidim
