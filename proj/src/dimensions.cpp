#include "jacobidim/dimensions.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "jacobidim/arith.hpp"
#include "jacobidim/class_numbers.hpp"
#include "jacobidim/s_functions.hpp"

namespace jacobidim {

namespace {

void check_km(std::int64_t k, std::int64_t m) {
    if (k < 2)
        throw std::domain_error(
            "weight k < 2 is unsupported: the skew-holomorphic correction needed below "
            "weight 2 is nontrivial and not computed here");
    if (m < 1) throw std::domain_error("index m must be >= 1");
}

void check_widths(const std::vector<std::int64_t>& widths) {
    if (widths.empty()) throw std::domain_error("width list must be nonempty");
    for (std::int64_t b : widths)
        if (b < 1) throw std::domain_error("cusp widths must be >= 1");
}

int parity_sign(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

// Integrality and (for k >= 3) nonnegativity hold whenever the scheme comes
// from an actual group; a violation means the scheme is not realizable.
DimensionResult finish_scheme_value(Rational value, std::int64_t k) {
    if (!value.is_integer())
        throw std::domain_error("branching scheme yields the non-integral value " +
                                value.str() + "; no group realizes this scheme");
    bool plain = k >= 3;
    if (plain && value.sign() < 0)
        throw std::domain_error("branching scheme yields the negative dimension " +
                                value.str() + "; no group realizes this scheme");
    return {value, plain};
}

// Width lists from Gamma(N) repeat one width thousands of times, so the
// per-width terms are grouped before evaluation.
std::map<std::int64_t, std::int64_t> width_multiset(const std::vector<std::int64_t>& widths) {
    std::map<std::int64_t, std::int64_t> counts;
    for (std::int64_t b : widths) ++counts[b];
    return counts;
}

Rational theorem2_raw(std::int64_t k, std::int64_t m, const std::vector<std::int64_t>& widths) {
    SContext c1(k, m, 1);
    SContext cm(k, m, m);
    Rational sgn(parity_sign(k));
    Rational total(0);
    for (auto [b, count] : width_multiset(widths))
        total += Rational(count) * (s_top(c1, b) + sgn * s_par(cm, b));
    return total;
}

}  // namespace

DimensionResult dim_theorem1(std::int64_t k, std::int64_t m,
                             const std::vector<std::int64_t>& widths) {
    check_km(k, m);
    check_widths(widths);
    std::int64_t width_sum = 0;
    for (std::int64_t b : widths) width_sum += b;
    // m * [G1:G] * (2k-3)/24 with [G1:G] = 2 * sum of widths.
    Rational total = Rational(Int(m) * 2 * width_sum * (2 * k - 3), 24);
    for (auto [b, count] : width_multiset(widths)) {
        std::int64_t g = gcd(4 * m, b);
        std::int64_t f = 4 * m / g;
        Rational term = Rational(m, f) * Rational(square_part(f));
        Rational inner(0);
        std::int64_t twist = b / g;
        for (std::int64_t d : divisors(f))
            if (is_squarefree(f / d))
                inner += Rational(kronecker_symbol(-d, twist)) * hurwitz_h1(-d);
        term += Rational(2 * m, f) * inner;
        total -= Rational(count) * term;
    }
    return {total, k >= 3};
}

DimensionResult dim_theorem2(std::int64_t k, std::int64_t m,
                             const std::vector<std::int64_t>& widths) {
    check_km(k, m);
    check_widths(widths);
    return {theorem2_raw(k, m, widths), k >= 3};
}

DimensionResult dim_theorem3(std::int64_t k, std::int64_t m, const BranchingScheme& scheme) {
    check_km(k, m);
    scheme.validate();
    if (!scheme.contains_minus_one)
        throw std::domain_error("dim_theorem3 needs -1 in the group; use dim_theorem4");
    SContext c1(k, m, 1);
    SContext cm(k, m, m);
    Rational sgn(parity_sign(k));
    Rational half(1, 2);
    Rational total(0);
    for (auto [b, count] : width_multiset(scheme.regular_cusp_widths)) {
        Rational term = half * (s_top(c1, b) + sgn * s_top(cm, b));
        term += half * (s_par(c1, b) + sgn * s_par(cm, b));
        total += Rational(count) * term;
    }
    const std::pair<int, std::int64_t> orbits[] = {{-1, scheme.e1}, {0, scheme.e0}, {1, scheme.e1}};
    for (auto [t, count] : orbits)
        total += Rational(count, 2) * (s_ell(c1, t) + sgn * s_ell(cm, t));
    return finish_scheme_value(total, k);
}

DimensionResult dim_theorem4(std::int64_t k, std::int64_t m, const BranchingScheme& scheme) {
    check_km(k, m);
    scheme.validate();
    if (scheme.contains_minus_one)
        throw std::domain_error("dim_theorem4 needs -1 absent from the group; use dim_theorem3");
    SContext c1(k, m, 1);
    SContext cm(k, m, m);
    Rational sgn(parity_sign(k));
    Rational half(1, 2);
    Rational total(0);
    for (auto [b, count] : width_multiset(scheme.regular_cusp_widths))
        total += Rational(count) * (s_top(c1, b) + sgn * s_par(cm, b));
    for (auto [b, count] : width_multiset(scheme.irregular_cusp_widths)) {
        Rational term = half * (s_top(c1, 2 * b) + sgn * s_par(cm, 2 * b));
        term += s_par(c1, b) + sgn * s_top(cm, b);
        term -= half * (s_par(c1, 2 * b) + sgn * s_top(cm, 2 * b));
        total += Rational(count) * term;
    }
    // Elliptic elements here have order 3 or 6; their two traces pair up
    // asymmetrically across the two evaluation points.
    total += Rational(scheme.e1) * (s_ell(c1, -1) + sgn * s_ell(cm, +1));
    return finish_scheme_value(total, k);
}

DimensionResult dim_jacobi(std::int64_t k, std::int64_t m, const BranchingScheme& scheme) {
    check_km(k, m);
    scheme.validate();
    return scheme.contains_minus_one ? dim_theorem3(k, m, scheme) : dim_theorem4(k, m, scheme);
}

DimensionResult dim_corollary_gammaN(std::int64_t N, std::int64_t k, std::int64_t m) {
    if (N < 3) throw std::domain_error("dim_corollary_gammaN: N must be >= 3");
    if (k < 3) throw std::domain_error("dim_corollary_gammaN: k must be >= 3");
    if (m < 1) throw std::domain_error("dim_corollary_gammaN: m must be >= 1");
    std::int64_t d = gcd(4 * m, N);
    Rational bracket = Rational(Int(m) * N * (2 * k - 3), 24);
    bracket -= Rational(d, 8) * Rational(square_part(4 * m / d));
    Rational inner(0);
    std::int64_t quot = 4 * m / d;
    std::int64_t twist = N / d;
    for (std::int64_t dd : divisors(quot))
        if (is_squarefree(quot / dd))
            inner += Rational(kronecker_symbol(-dd, twist)) * hurwitz_h1(-dd);
    bracket -= Rational(d, 4) * inner;
    Rational value = Rational(Int(euler_phi(N)) * psi_index(N)) * bracket;
    return finish_scheme_value(value, k);
}

DimensionResult dim_gammaN_4m_divides_N(std::int64_t N, std::int64_t k, std::int64_t m) {
    if (N < 3) throw std::domain_error("dim_gammaN_4m_divides_N: N must be >= 3");
    if (k < 3) throw std::domain_error("dim_gammaN_4m_divides_N: k must be >= 3");
    if (m < 1) throw std::domain_error("dim_gammaN_4m_divides_N: m must be >= 1");
    if (N % (4 * m) != 0)
        throw std::domain_error("dim_gammaN_4m_divides_N: requires 4m | N");
    Rational bracket = Rational(Int(N) * (2 * k - 3), 24) - Rational(1, 2);
    Rational value = Rational(Int(m) * euler_phi(N) * psi_index(N)) * bracket;
    return finish_scheme_value(value, k);
}

Rational skew_dim_conjecture(std::int64_t k, std::int64_t m) {
    check_km(k, m);
    SContext c1(k, m, 1);
    SContext cm(k, m, m);
    // Same shape as dim_theorem3 on the full modular group (one cusp of
    // width 1, e0 = e1 = 1) with the cross terms flipped to -(-1)^k.
    Rational eps(-parity_sign(k));
    Rational half(1, 2);
    Rational total = half * (s_top(c1, 1) + eps * s_top(cm, 1));
    total += half * (s_par(c1, 1) + eps * s_par(cm, 1));
    const std::pair<int, std::int64_t> orbits[] = {{-1, 1}, {0, 1}, {1, 1}};
    for (auto [t, count] : orbits)
        total += Rational(count, 2) * (s_ell(c1, t) + eps * s_ell(cm, t));
    return total;
}

}  // namespace jacobidim
