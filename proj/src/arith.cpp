#include "jacobidim/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jacobidim {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be nonzero");
    if (n < 0) n = -n;
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t square_part(std::int64_t n) {
    if (n < 1) throw std::domain_error("square_part: n must be >= 1");
    std::int64_t q = 1;
    for (auto [p, e] : factorize(n))
        for (int i = 0; i < e / 2; ++i) q *= p;
    return q;
}

std::pair<std::int64_t, std::int64_t> core_square_decompose(std::int64_t n) {
    if (n < 1) throw std::domain_error("core_square_decompose: n must be >= 1");
    std::int64_t a = square_part(n);
    return {a, n / (a * a)};
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) throw std::domain_error("is_squarefree: n must be nonzero");
    if (n < 0) n = -n;
    if (n == 1) return true;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

int kronecker_symbol(std::int64_t top, std::int64_t bottom) {
    if (bottom < 1) throw std::domain_error("kronecker_symbol: bottom must be >= 1");
    int result = 1;
    // Split off the even part of the bottom: (top | 2) is 0 for even top and
    // depends on top mod 8 otherwise.
    while (bottom % 2 == 0) {
        if (top % 2 == 0) return 0;
        bottom /= 2;
        std::int64_t r = ((top % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol for the remaining odd bottom, by quadratic reciprocity.
    std::int64_t a = ((top % bottom) + bottom) % bottom;
    std::int64_t n = bottom;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
    std::int64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return n == 1 ? 1 : r;
}

std::int64_t psi_index(std::int64_t n) {
    if (n < 1) throw std::domain_error("psi_index: n must be >= 1");
    if (n == 1) return 1;
    std::int64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p + 1);
    return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<std::int64_t> out{1};
    if (n > 1) {
        for (auto [p, e] : factorize(n)) {
            std::size_t base = out.size();
            std::int64_t pk = 1;
            for (int i = 1; i <= e; ++i) {
                pk *= p;
                for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jacobidim
