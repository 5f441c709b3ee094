#pragma once

#include <cstdint>
#include <vector>

#include "jacobidim/rational.hpp"

namespace jacobidim {

// Positive definite integral binary quadratic form a*x^2 + b*x*y + c*y^2 in
// reduced position: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
struct ReducedForm {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

// One reduced representative per SL2(Z)-class of discriminant delta, ordered
// by (a, b).  delta must be negative and congruent to 0 or 1 mod 4.
std::vector<ReducedForm> enumerate_reduced_forms(std::int64_t delta);

// Hurwitz class number H(delta): class count of discriminant delta weighted
// by 1/2 for classes of x^2 + y^2 type and 1/3 for x^2 + x*y + y^2 type,
// extended by H(0) = -1/12 and H(delta) = 0 for delta = 2, 3 mod 4.
// Positive delta is a domain error.  Results are memoized (thread safe).
Rational hurwitz_h1(std::int64_t delta);

// Twisted class number H_n(delta) for n >= 1, delta <= 0: with
// gcd(n, delta) = a^2 * b, b squarefree (gcd(n, 0) read as n), this is
//   a^2*b * (delta/(a*b)^2 | n/(a^2*b)) * H_1(delta/(a*b)^2)
// when (a*b)^2 divides delta and 0 otherwise.  H_1 = hurwitz_h1.
Rational hurwitz_hn(std::int64_t n, std::int64_t delta);

}  // namespace jacobidim
