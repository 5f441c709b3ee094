#include "jacobidim/crosscheck.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "jacobidim/arith.hpp"
#include "jacobidim/class_numbers.hpp"
#include "jacobidim/dimensions.hpp"
#include "jacobidim/group_data.hpp"
#include "jacobidim/s_functions.hpp"

namespace jacobidim {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

}  // namespace

std::complex<double> lemma_lhs_complex(std::int64_t a, std::int64_t f) {
    if (a < 1 || f < 1) throw std::domain_error("lemma_lhs_complex: a, f must be >= 1");
    std::complex<double> total(0.0, 0.0);
    for (std::int64_t nu = 1; nu < f; ++nu) {  // cot(0) term is defined away
        double cot = std::cos(kPi * nu / f) / std::sin(kPi * nu / f);
        std::complex<double> inner(0.0, 0.0);
        for (std::int64_t lam = 0; lam < f; ++lam) {
            std::int64_t r = (a * nu % f) * (lam * lam % f) % f;
            double arg = 2.0 * kPi * r / f;
            inner += std::complex<double>(std::cos(arg), std::sin(arg));
        }
        total += cot * inner;
    }
    return std::complex<double>(0.0, 1.0) * total / static_cast<double>(f);
}

double lemma_lhs_numeric(std::int64_t a, std::int64_t f) {
    std::complex<double> lhs = lemma_lhs_complex(a, f);
    if (std::abs(lhs.imag()) >= 1e-8 * static_cast<double>(f) * static_cast<double>(f))
        throw std::logic_error("lemma_lhs_numeric: imaginary part did not cancel at a=" +
                               std::to_string(a) + ", f=" + std::to_string(f));
    return lhs.real();
}

Rational lemma_rhs_exact(std::int64_t a, std::int64_t f) {
    if (a < 1 || f < 1) throw std::domain_error("lemma_rhs_exact: a, f must be >= 1");
    std::int64_t g = gcd(a, f);
    std::int64_t quot = f / g;
    std::int64_t twist = a / g;
    Rational sum(0);
    for (std::int64_t d : divisors(quot))
        if (is_squarefree(quot / d))
            sum += Rational(kronecker_symbol(-d, twist)) * hurwitz_h1(-d);
    return Rational(-2 * g) * sum;
}

LemmaCheckReport lemma_check(std::int64_t a, std::int64_t f) {
    LemmaCheckReport rep;
    rep.a = a;
    rep.f = f;
    std::complex<double> lhs = lemma_lhs_complex(a, f);
    rep.lhs_numeric = lhs.real();
    rep.lhs_imag = lhs.imag();
    rep.rhs_exact = lemma_rhs_exact(a, f);
    rep.abs_error = std::abs(rep.lhs_numeric - rep.rhs_exact.to_double());
    return rep;
}

std::int64_t classical_dim_cusp_forms(std::int64_t w, std::int64_t N) {
    if (w < 4 || w % 2 != 0)
        throw std::domain_error("classical_dim_cusp_forms: weight must be even and >= 4");
    BranchingScheme s = gamma0_scheme(N);
    std::int64_t mu = s.psl_index();
    std::int64_t nu2 = s.e0;
    std::int64_t nu3 = s.e1;
    std::int64_t nu_inf = static_cast<std::int64_t>(s.regular_cusp_widths.size());
    Rational genus = Rational(1) + Rational(mu, 12) - Rational(nu2, 4) - Rational(nu3, 3) -
                     Rational(nu_inf, 2);
    std::int64_t g = genus.to_int64();  // throws if the scheme data were inconsistent
    std::int64_t dim = (w - 1) * (g - 1) + (w / 2 - 1) * nu_inf + nu2 * (w / 4) + nu3 * (w / 3);
    return dim;
}

Rational s_identity_dim(std::int64_t k, std::int64_t m) {
    if (k < 3) throw std::domain_error("s_identity_dim: k must be >= 3");
    if (m < 1) throw std::domain_error("s_identity_dim: m must be >= 1");
    Rational total(0);
    for (std::int64_t mp : divisors(m)) {
        if (!is_squarefree(m / mp)) continue;
        SContext c(k, mp, 1);
        total += s_top(c, 1) + s_par(c, 1);
        for (int t = -1; t <= 1; ++t) total += s_ell(c, t);
    }
    return total;
}

bool lifting_identity_check(std::int64_t p, std::int64_t k) {
    if (!is_prime(p) || p % 12 != 1)
        throw std::domain_error("lifting_identity_check: p must be a prime = 1 mod 12");
    if (k < 4 || k % 2 != 0)
        throw std::domain_error("lifting_identity_check: k must be even and >= 4");
    BranchingScheme full = principal_congruence_scheme(1);
    Rational lhs = dim_jacobi(k, 1, gamma0_scheme(p)).value;
    Rational rhs = dim_jacobi(k, 1, full).value + dim_jacobi(k, p, full).value +
                   skew_dim_conjecture(k, p);
    return lhs == rhs;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json jl = nlohmann::json::array();
    for (const CheckLine& l : lines)
        jl.push_back({{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
    return nlohmann::json{{"suite", suite},
                          {"checks", checks},
                          {"failures", failures},
                          {"worst_abs_error", worst_abs_error},
                          {"lines", jl}};
}

SuiteReport run_lemma_suite(std::int64_t max_a, std::int64_t max_f) {
    SuiteReport rep;
    rep.suite = "lemma";
    constexpr double kTol = 1e-7;
    for (std::int64_t a = 1; a <= max_a; ++a) {
        CheckLine line;
        double worst = 0.0, worst_imag = 0.0;
        std::int64_t bad = 0;
        for (std::int64_t f = 1; f <= max_f; ++f) {
            LemmaCheckReport r = lemma_check(a, f);
            ++rep.checks;
            worst = std::max(worst, r.abs_error);
            worst_imag = std::max(worst_imag, std::abs(r.lhs_imag));
            if (r.abs_error >= kTol || std::abs(r.lhs_imag) >= kTol) {
                ++bad;
                ++rep.failures;
            }
        }
        rep.worst_abs_error = std::max(rep.worst_abs_error, std::max(worst, worst_imag));
        line.label = "a=" + std::to_string(a) + ", f=1.." + std::to_string(max_f);
        line.pass = bad == 0;
        line.detail = "worst |lhs-rhs| = " + format_double(worst) +
                      ", worst |imag| = " + format_double(worst_imag);
        rep.lines.push_back(line);
    }
    return rep;
}

SuiteReport run_identity_suite(std::int64_t max_k, std::int64_t max_m) {
    SuiteReport rep;
    rep.suite = "identity";
    for (std::int64_t m = 1; m <= max_m; ++m) {
        CheckLine line;
        std::int64_t bad = 0;
        for (std::int64_t k = 3; k <= max_k; ++k) {
            ++rep.checks;
            Rational lhs = s_identity_dim(k, m);
            Rational rhs(classical_dim_cusp_forms(2 * k - 2, m));
            if (lhs != rhs) {
                ++bad;
                ++rep.failures;
                if (line.detail.empty())
                    line.detail = "first failure at k=" + std::to_string(k) + ": " + lhs.str() +
                                  " != " + rhs.str();
            }
        }
        line.label = "m=" + std::to_string(m) + ", k=3.." + std::to_string(max_k);
        line.pass = bad == 0;
        if (line.detail.empty()) line.detail = "matches dim S_{2k-2}(Gamma_0(m))";
        rep.lines.push_back(line);
    }
    return rep;
}

SuiteReport run_lifting_suite() {
    SuiteReport rep;
    rep.suite = "lifting";
    for (std::int64_t p : {13, 37, 61}) {
        for (std::int64_t k : {4, 6, 8, 10, 12}) {
            ++rep.checks;
            bool ok = lifting_identity_check(p, k);
            if (!ok) ++rep.failures;
            rep.lines.push_back({"p=" + std::to_string(p) + ", k=" + std::to_string(k), ok,
                                 ok ? "lift decomposition holds" : "lift decomposition FAILS"});
        }
    }
    return rep;
}

SuiteReport run_equivalence_suite(std::int64_t max_k, std::int64_t max_m, std::int64_t max_n,
                                  int synthetic_lists) {
    SuiteReport rep;
    rep.suite = "equivalence";

    auto compare_on = [&](const std::vector<std::int64_t>& widths, std::int64_t& bad,
                          std::string& detail) {
        for (std::int64_t k = 2; k <= max_k; ++k)
            for (std::int64_t m = 1; m <= max_m; ++m) {
                ++rep.checks;
                Rational v1 = dim_theorem1(k, m, widths).value;
                Rational v2 = dim_theorem2(k, m, widths).value;
                if (v1 != v2) {
                    ++bad;
                    ++rep.failures;
                    if (detail.empty())
                        detail = "k=" + std::to_string(k) + ", m=" + std::to_string(m) + ": " +
                                 v1.str() + " != " + v2.str();
                }
            }
    };

    for (std::int64_t N = 3; N <= max_n; ++N) {
        std::vector<std::int64_t> widths = principal_congruence_scheme(N).regular_cusp_widths;
        CheckLine line;
        std::int64_t bad = 0;
        compare_on(widths, bad, line.detail);
        line.label = "Gamma(" + std::to_string(N) + ") widths, k<=" + std::to_string(max_k) +
                     ", m<=" + std::to_string(max_m);
        line.pass = bad == 0;
        if (line.detail.empty()) line.detail = "theorem 1 == theorem 2 exactly";
        rep.lines.push_back(line);
    }

    {
        // Deterministic synthetic width lists; these need not come from any
        // group, the two theorems are still the same rational function.
        std::mt19937 gen(721041u);
        CheckLine line;
        std::int64_t bad = 0;
        for (int i = 0; i < synthetic_lists; ++i) {
            std::size_t len = 1 + gen() % 8;
            std::vector<std::int64_t> widths(len);
            for (auto& w : widths) w = 1 + static_cast<std::int64_t>(gen() % 24);
            compare_on(widths, bad, line.detail);
        }
        line.label = "synthetic width lists x" + std::to_string(synthetic_lists);
        line.pass = bad == 0;
        if (line.detail.empty()) line.detail = "theorem 1 == theorem 2 exactly";
        rep.lines.push_back(line);
    }

    {
        CheckLine line;
        std::int64_t bad = 0;
        for (std::int64_t N = 3; N <= 24; ++N) {
            std::vector<std::int64_t> widths = principal_congruence_scheme(N).regular_cusp_widths;
            for (std::int64_t m = 1; m <= 16; ++m)
                for (std::int64_t k = 3; k <= 10; ++k) {
                    ++rep.checks;
                    Rational closed = dim_corollary_gammaN(N, k, m).value;
                    Rational via_cusps = dim_theorem2(k, m, widths).value;
                    if (closed != via_cusps) {
                        ++bad;
                        ++rep.failures;
                        if (line.detail.empty())
                            line.detail = "N=" + std::to_string(N) + ", k=" + std::to_string(k) +
                                          ", m=" + std::to_string(m);
                    }
                    if (N % (4 * m) == 0) {
                        ++rep.checks;
                        Rational special = dim_gammaN_4m_divides_N(N, k, m).value;
                        if (special != closed) {
                            ++bad;
                            ++rep.failures;
                            if (line.detail.empty())
                                line.detail = "4m|N form at N=" + std::to_string(N) +
                                              ", k=" + std::to_string(k) +
                                              ", m=" + std::to_string(m);
                        }
                    }
                }
        }
        line.label = "Gamma(N) closed form vs theorem 2, N<=24, m<=16, k<=10";
        line.pass = bad == 0;
        if (line.detail.empty()) line.detail = "corollary == per-cusp sum exactly";
        rep.lines.push_back(line);
    }

    return rep;
}

}  // namespace jacobidim
