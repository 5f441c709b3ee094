#include "jacobidim/class_numbers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "jacobidim/arith.hpp"

namespace jacobidim {

namespace {

std::int64_t residue_mod4(std::int64_t delta) { return ((delta % 4) + 4) % 4; }

std::mutex h1_cache_mutex;
std::map<std::int64_t, Rational>& h1_cache() {
    static std::map<std::int64_t, Rational> cache;
    return cache;
}

}  // namespace

std::vector<ReducedForm> enumerate_reduced_forms(std::int64_t delta) {
    if (delta >= 0)
        throw std::domain_error("enumerate_reduced_forms: discriminant must be negative");
    std::int64_t r = residue_mod4(delta);
    if (r == 2 || r == 3)
        throw std::domain_error("enumerate_reduced_forms: discriminant must be 0 or 1 mod 4");
    std::int64_t d = -delta;
    std::vector<ReducedForm> forms;
    // |b| <= a <= c forces 3a^2 <= -delta; c is pinned by 4ac = b^2 - delta.
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t num = b * b + d;
            if (num % (4 * a)) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

Rational hurwitz_h1(std::int64_t delta) {
    if (delta > 0) throw std::domain_error("hurwitz_h1: discriminant must be <= 0");
    if (delta == 0) return Rational(-1, 12);
    std::int64_t r = residue_mod4(delta);
    if (r == 2 || r == 3) return Rational(0);
    {
        std::lock_guard<std::mutex> lock(h1_cache_mutex);
        auto it = h1_cache().find(delta);
        if (it != h1_cache().end()) return it->second;
    }
    Rational h(0);
    for (const ReducedForm& f : enumerate_reduced_forms(delta)) {
        if (f.b == 0 && f.a == f.c)
            h += Rational(1, 2);
        else if (f.a == f.b && f.b == f.c)
            h += Rational(1, 3);
        else
            h += Rational(1);
    }
    {
        std::lock_guard<std::mutex> lock(h1_cache_mutex);
        h1_cache().emplace(delta, h);
    }
    return h;
}

Rational hurwitz_hn(std::int64_t n, std::int64_t delta) {
    if (n < 1) throw std::domain_error("hurwitz_hn: n must be >= 1");
    if (delta > 0) throw std::domain_error("hurwitz_hn: discriminant must be <= 0");
    std::int64_t g = (delta == 0) ? n : gcd(n, delta);
    auto [a, b] = core_square_decompose(g);
    std::int64_t ab = a * b;
    if (delta % (ab * ab) != 0) return Rational(0);
    std::int64_t quotient = delta / (ab * ab);
    int twist = kronecker_symbol(quotient, n / (a * ab));
    if (twist == 0) return Rational(0);
    return Rational(g) * Rational(twist) * hurwitz_h1(quotient);
}

}  // namespace jacobidim
