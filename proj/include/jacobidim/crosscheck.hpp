#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacobidim/rational.hpp"

namespace jacobidim {

// Independent consistency checks: a cotangent/Gauss-sum identity evaluated
// numerically against its exact class-number side, the classical dimension
// formula for S_w(Gamma_0(N)) as an external oracle, and two identities
// tying the Jacobi dimension formulas to that oracle.

struct LemmaCheckReport {
    std::int64_t a = 0;
    std::int64_t f = 0;
    double lhs_numeric = 0.0;   // real part of the cotangent sum
    double lhs_imag = 0.0;      // imaginary part, should vanish
    Rational rhs_exact;         // -2 gcd(a,f) * twisted class number sum
    double abs_error = 0.0;     // |lhs_numeric - rhs_exact|
};

// (i/f) sum_{nu mod f} cot(pi nu / f) sum_{lambda mod f} e(a nu lambda^2 / f),
// evaluated in double precision.  Requires a, f >= 1.
std::complex<double> lemma_lhs_complex(std::int64_t a, std::int64_t f);

// Real part of the sum above; the imaginary part must vanish and is asserted
// to be below 1e-8 * f^2 (std::logic_error otherwise).
double lemma_lhs_numeric(std::int64_t a, std::int64_t f);

// Exact right-hand side:
//   -2 (a,f) sum_{D | f/(a,f), D < 0, |f/((a,f) D)| squarefree}
//        (D | a/(a,f)) H(D).
Rational lemma_rhs_exact(std::int64_t a, std::int64_t f);

LemmaCheckReport lemma_check(std::int64_t a, std::int64_t f);

// dim S_w(Gamma_0(N)) for even w >= 4, via genus + elliptic + cusp counts.
// Deliberately a different formula family from the Jacobi machinery.
std::int64_t classical_dim_cusp_forms(std::int64_t w, std::int64_t N);

// sum over m' | m with m/m' squarefree of
//   s_top + s_par + sum_t s_ell  at (k, m', n = 1, b = 1),
// which should equal dim S_{2k-2}(Gamma_0(m)).  Requires k >= 3, m >= 1.
Rational s_identity_dim(std::int64_t k, std::int64_t m);

// For prime p = 1 mod 12 and even k >= 4:
//   dim S_{k,1}(Gamma_0(p)) = dim S_{k,1}(Gamma(1)) + dim S_{k,p}(Gamma(1))
//                              + skew_dim_conjecture(k, p).
bool lifting_identity_check(std::int64_t p, std::int64_t k);

// ---- batch suites, shared by the CLI `check` subcommand and the tests ----

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    double worst_abs_error = 0.0;  // numeric suites only; 0 for exact ones

    bool passed() const { return failures == 0; }
    nlohmann::json to_json() const;
};

SuiteReport run_lemma_suite(std::int64_t max_a = 36, std::int64_t max_f = 36);
SuiteReport run_identity_suite(std::int64_t max_k = 13, std::int64_t max_m = 60);
SuiteReport run_lifting_suite();
// Theorem 1 vs Theorem 2 on Gamma(N) width lists and on deterministic
// pseudo-random synthetic lists, plus the closed Gamma(N) forms against
// Theorem 2.
SuiteReport run_equivalence_suite(std::int64_t max_k = 12, std::int64_t max_m = 36,
                                  std::int64_t max_n = 16, int synthetic_lists = 200);

}  // namespace jacobidim
