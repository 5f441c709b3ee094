#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "jacobidim/arith.hpp"
#include "jacobidim/class_numbers.hpp"
#include "jacobidim/crosscheck.hpp"
#include "jacobidim/dimensions.hpp"
#include "jacobidim/gegenbauer.hpp"
#include "jacobidim/group_data.hpp"
#include "jacobidim/rational.hpp"
#include "jacobidim/s_functions.hpp"

namespace py = pybind11;
using namespace jacobidim;

namespace {

// cpp_int -> arbitrary-precision Python int, via the decimal string.
py::object big_int(const Int& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

std::string scheme_repr(const BranchingScheme& s) {
    std::ostringstream os;
    os << "BranchingScheme(minus_one=" << (s.contains_minus_one ? "True" : "False")
       << ", regular_widths=[";
    for (std::size_t i = 0; i < s.regular_cusp_widths.size(); ++i)
        os << (i ? ", " : "") << s.regular_cusp_widths[i];
    os << "], irregular_widths=[";
    for (std::size_t i = 0; i < s.irregular_cusp_widths.size(); ++i)
        os << (i ? ", " : "") << s.irregular_cusp_widths[i];
    os << "], e0=" << s.e0 << ", e1=" << s.e1 << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact dimensions of spaces of Jacobi cusp forms from branching data";

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long>(), py::arg("value"))
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("num", [](const Rational& r) { return big_int(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return big_int(r.den()); })
        .def("is_integer", &Rational::is_integer)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__float__", &Rational::to_double)
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; },
             py::is_operator())
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; },
             py::is_operator())
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); });

    py::class_<ReducedForm>(m, "ReducedForm")
        .def_readonly("a", &ReducedForm::a)
        .def_readonly("b", &ReducedForm::b)
        .def_readonly("c", &ReducedForm::c)
        .def("__eq__", [](const ReducedForm& x, const ReducedForm& y) { return x == y; },
             py::is_operator())
        .def("__repr__", [](const ReducedForm& f) {
            return "ReducedForm(" + std::to_string(f.a) + ", " + std::to_string(f.b) + ", " +
                   std::to_string(f.c) + ")";
        });

    py::class_<BranchingScheme>(m, "BranchingScheme")
        .def(py::init([](bool minus_one, std::vector<std::int64_t> regular,
                         std::vector<std::int64_t> irregular, std::int64_t e0, std::int64_t e1) {
                 BranchingScheme s{minus_one, std::move(regular), std::move(irregular), e0, e1};
                 s.validate();
                 return s;
             }),
             py::arg("minus_one"), py::arg("regular_widths"),
             py::arg("irregular_widths") = std::vector<std::int64_t>{}, py::arg("e0") = 0,
             py::arg("e1") = 0)
        .def_readonly("contains_minus_one", &BranchingScheme::contains_minus_one)
        .def_readonly("regular_cusp_widths", &BranchingScheme::regular_cusp_widths)
        .def_readonly("irregular_cusp_widths", &BranchingScheme::irregular_cusp_widths)
        .def_readonly("e0", &BranchingScheme::e0)
        .def_readonly("e1", &BranchingScheme::e1)
        .def("psl_index", &BranchingScheme::psl_index)
        .def("validate", &BranchingScheme::validate)
        .def("to_json", [](const BranchingScheme& s) { return s.to_json().dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        nlohmann::json doc;
                        try {
                            doc = nlohmann::json::parse(text);
                        } catch (const nlohmann::json::exception& e) {
                            throw std::domain_error(std::string("not valid JSON: ") + e.what());
                        }
                        return BranchingScheme::from_json(doc);
                    },
                    py::arg("text"))
        .def("__eq__",
             [](const BranchingScheme& x, const BranchingScheme& y) { return x == y; },
             py::is_operator())
        .def("__repr__", &scheme_repr);

    py::class_<DimensionResult>(m, "DimensionResult")
        .def_readonly("value", &DimensionResult::value)
        .def_readonly("plain", &DimensionResult::plain)
        .def("__repr__", [](const DimensionResult& r) {
            return "DimensionResult(value=" + r.value.str() +
                   ", plain=" + (r.plain ? std::string("True") : std::string("False")) + ")";
        });

    py::class_<SFunctionTriple>(m, "SFunctionTriple")
        .def_readonly("top", &SFunctionTriple::top)
        .def_readonly("par", &SFunctionTriple::par)
        .def_readonly("ell_minus1", &SFunctionTriple::ell_minus1)
        .def_readonly("ell_0", &SFunctionTriple::ell_0)
        .def_readonly("ell_plus1", &SFunctionTriple::ell_plus1)
        .def("sum", &SFunctionTriple::sum);

    py::class_<LemmaCheckReport>(m, "LemmaCheckReport")
        .def_readonly("a", &LemmaCheckReport::a)
        .def_readonly("f", &LemmaCheckReport::f)
        .def_readonly("lhs_numeric", &LemmaCheckReport::lhs_numeric)
        .def_readonly("lhs_imag", &LemmaCheckReport::lhs_imag)
        .def_readonly("rhs_exact", &LemmaCheckReport::rhs_exact)
        .def_readonly("abs_error", &LemmaCheckReport::abs_error);

    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("suite", &SuiteReport::suite)
        .def_readonly("checks", &SuiteReport::checks)
        .def_readonly("failures", &SuiteReport::failures)
        .def_readonly("worst_abs_error", &SuiteReport::worst_abs_error)
        .def("passed", &SuiteReport::passed)
        .def("summary_json", [](const SuiteReport& r) { return r.to_json().dump(); });

    // number theory
    m.def("kronecker_symbol", &kronecker_symbol, py::arg("top"), py::arg("bottom"));
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("psi_index", &psi_index, py::arg("n"));
    m.def("square_part", &square_part, py::arg("n"));
    m.def("is_squarefree", &is_squarefree, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));

    // class numbers
    m.def("hurwitz_h1", &hurwitz_h1, py::arg("delta"));
    m.def("hurwitz_hn", &hurwitz_hn, py::arg("n"), py::arg("delta"));
    m.def("enumerate_reduced_forms", &enumerate_reduced_forms, py::arg("delta"));

    // Gegenbauer values
    m.def("p_even", &p_even, py::arg("j"), py::arg("u"));

    // per-cusp building blocks, flattened over the (k, m, n) context
    m.def("s_top",
          [](std::int64_t k, std::int64_t m_, std::int64_t n, std::int64_t b) {
              return s_top(SContext(k, m_, n), b);
          },
          py::arg("k"), py::arg("m"), py::arg("n"), py::arg("b"));
    m.def("s_par",
          [](std::int64_t k, std::int64_t m_, std::int64_t n, std::int64_t b) {
              return s_par(SContext(k, m_, n), b);
          },
          py::arg("k"), py::arg("m"), py::arg("n"), py::arg("b"));
    m.def("s_ell",
          [](std::int64_t k, std::int64_t m_, std::int64_t n, int t) {
              return s_ell(SContext(k, m_, n), t);
          },
          py::arg("k"), py::arg("m"), py::arg("n"), py::arg("t"));
    m.def("s_triple",
          [](std::int64_t k, std::int64_t m_, std::int64_t n, std::int64_t b) {
              return s_triple(SContext(k, m_, n), b);
          },
          py::arg("k"), py::arg("m"), py::arg("n"), py::arg("b"));

    // group constructors
    m.def("principal_congruence_scheme", &principal_congruence_scheme, py::arg("N"));
    m.def("gamma0_scheme", &gamma0_scheme, py::arg("N"));
    m.def("gamma1_scheme", &gamma1_scheme, py::arg("N"));

    // dimension formulas
    m.def("dim_theorem1", &dim_theorem1, py::arg("k"), py::arg("m"), py::arg("widths"));
    m.def("dim_theorem2", &dim_theorem2, py::arg("k"), py::arg("m"), py::arg("widths"));
    m.def("dim_theorem3", &dim_theorem3, py::arg("k"), py::arg("m"), py::arg("scheme"));
    m.def("dim_theorem4", &dim_theorem4, py::arg("k"), py::arg("m"), py::arg("scheme"));
    m.def("dim_jacobi", &dim_jacobi, py::arg("k"), py::arg("m"), py::arg("scheme"));
    m.def("dim_corollary_gammaN", &dim_corollary_gammaN, py::arg("N"), py::arg("k"), py::arg("m"));
    m.def("dim_gammaN_4m_divides_N", &dim_gammaN_4m_divides_N, py::arg("N"), py::arg("k"),
          py::arg("m"));
    m.def("skew_dim_conjecture", &skew_dim_conjecture, py::arg("k"), py::arg("m"));

    // cross-checks
    m.def("lemma_check", &lemma_check, py::arg("a"), py::arg("f"));
    m.def("classical_dim_cusp_forms", &classical_dim_cusp_forms, py::arg("w"), py::arg("N"));
    m.def("s_identity_dim", &s_identity_dim, py::arg("k"), py::arg("m"));
    m.def("lifting_identity_check", &lifting_identity_check, py::arg("p"), py::arg("k"));
    m.def("run_lemma_suite", &run_lemma_suite, py::arg("max_a") = 36, py::arg("max_f") = 36);
    m.def("run_identity_suite", &run_identity_suite, py::arg("max_k") = 13, py::arg("max_m") = 60);
    m.def("run_lifting_suite", &run_lifting_suite);
    m.def("run_equivalence_suite", &run_equivalence_suite, py::arg("max_k") = 12,
          py::arg("max_m") = 36, py::arg("max_n") = 16, py::arg("synthetic_lists") = 200);
}
