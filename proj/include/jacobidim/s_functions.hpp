#pragma once

#include <cstdint>

#include "jacobidim/rational.hpp"

namespace jacobidim {

// Evaluation point for the per-cusp building blocks below: weight k >= 2,
// index m >= 1, and an exact divisor n of m (n | m with gcd(n, m/n) = 1).
// n_prime = m / n is computed once and validated here.
struct SContext {
    std::int64_t k;
    std::int64_t m;
    std::int64_t n;
    std::int64_t n_prime;

    SContext(std::int64_t k, std::int64_t m, std::int64_t n);
};

// Contribution of a cusp of width b >= 1:
//   s_top(n) = -p_{2k-2}(2) * H_{b*n'}(0) - (1/2) * Q(n' * gcd(4n', b*n))
// with Q the square part.
Rational s_top(const SContext& ctx, std::int64_t b);

// s_par(n) = -(1/2) * g * p_{2k-2}(0) * sum over negative discriminants
// Delta | 4n/g with |4n/(g*Delta)| squarefree of H_{b*n'/g}(Delta), where
// g = gcd(4n, b*n').
Rational s_par(const SContext& ctx, std::int64_t b);

// Elliptic contribution for trace t in {-1, 0, +1}:
//   s_ell(n) = -[(t+2) | n] * p_{2k-2}(sqrt(t+2)) * H_{n'}(t^2 - 4).
Rational s_ell(const SContext& ctx, int t);

// All five building blocks at one (ctx, b).  Each value has denominator
// dividing 24; their sum at b = 1, n = 1 feeds the dim S_{2k-2}(Gamma_0(m))
// identity checked in crosscheck.
struct SFunctionTriple {
    Rational top;
    Rational par;
    Rational ell_minus1;
    Rational ell_0;
    Rational ell_plus1;

    Rational sum() const { return top + par + ell_minus1 + ell_0 + ell_plus1; }
};

SFunctionTriple s_triple(const SContext& ctx, std::int64_t b);

}  // namespace jacobidim
