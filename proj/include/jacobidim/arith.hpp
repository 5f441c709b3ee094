#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace jacobidim {

// Elementary number theory on machine integers.  Everything here uses trial
// division; inputs are expected to stay well below 2^60 (the dimension
// formulas never need more).

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Prime factorization of |n| as (p, exponent) pairs, p ascending.  n must be
// nonzero.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Largest q >= 1 with q^2 | n.  Requires n >= 1.
std::int64_t square_part(std::int64_t n);

// Decompose n = a^2 * b with b squarefree.  Requires n >= 1.
std::pair<std::int64_t, std::int64_t> core_square_decompose(std::int64_t n);

// True when no prime square divides n.  Requires n != 0.
bool is_squarefree(std::int64_t n);

// Kronecker symbol (top | bottom) for bottom >= 1, completely multiplicative
// in both arguments; (top | 1) = 1 for every top, including 0.
int kronecker_symbol(std::int64_t top, std::int64_t bottom);

// Euler phi.  Requires n >= 1.
std::int64_t euler_phi(std::int64_t n);

// psi(n) = n * prod_{p | n} (1 + 1/p), the index [PSL2(Z) : Gamma_0(n)].
// Requires n >= 1.
std::int64_t psi_index(std::int64_t n);

// All positive divisors of n, ascending.  Requires n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace jacobidim
