#include "jacobidim/s_functions.hpp"

#include <stdexcept>
#include <string>

#include "jacobidim/arith.hpp"
#include "jacobidim/class_numbers.hpp"
#include "jacobidim/gegenbauer.hpp"

namespace jacobidim {

SContext::SContext(std::int64_t k_, std::int64_t m_, std::int64_t n_)
    : k(k_), m(m_), n(n_), n_prime(0) {
    if (k < 2) throw std::domain_error("SContext: weight k must be >= 2");
    if (m < 1) throw std::domain_error("SContext: index m must be >= 1");
    if (n < 1 || m % n != 0)
        throw std::domain_error("SContext: n must be a positive divisor of m");
    n_prime = m / n;
    if (gcd(n, n_prime) != 1)
        throw std::domain_error("SContext: n must be an exact divisor of m (gcd(n, m/n) = 1)");
}

namespace {

void check_width(std::int64_t b) {
    if (b < 1) throw std::domain_error("cusp width must be >= 1");
}

}  // namespace

Rational s_top(const SContext& ctx, std::int64_t b) {
    check_width(b);
    Rational value = Rational(-p_even(2 * ctx.k - 2, 4)) * hurwitz_hn(b * ctx.n_prime, 0);
    std::int64_t q = square_part(ctx.n_prime * gcd(4 * ctx.n_prime, b * ctx.n));
    return value - Rational(q, 2);
}

Rational s_par(const SContext& ctx, std::int64_t b) {
    check_width(b);
    std::int64_t g = gcd(4 * ctx.n, b * ctx.n_prime);
    std::int64_t quot = 4 * ctx.n / g;
    std::int64_t twist_index = b * ctx.n_prime / g;
    Rational sum(0);
    for (std::int64_t d : divisors(quot))
        if (is_squarefree(quot / d)) sum += hurwitz_hn(twist_index, -d);
    return Rational(-g, 2) * Rational(p_even(2 * ctx.k - 2, 0)) * sum;
}

Rational s_ell(const SContext& ctx, int t) {
    if (t < -1 || t > 1) throw std::domain_error("s_ell: trace t must be -1, 0 or +1");
    std::int64_t u = t + 2;
    if (ctx.n % u != 0) return Rational(0);
    return Rational(-p_even(2 * ctx.k - 2, u)) * hurwitz_hn(ctx.n_prime, t * t - 4);
}

SFunctionTriple s_triple(const SContext& ctx, std::int64_t b) {
    return {s_top(ctx, b), s_par(ctx, b), s_ell(ctx, -1), s_ell(ctx, 0), s_ell(ctx, 1)};
}

}  // namespace jacobidim
