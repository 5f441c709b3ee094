// jacobidim: dimensions of spaces of Jacobi cusp forms from branching data.
//
// Subcommands:
//   dim      one evaluation (group, weight, index)
//   table    a (weight x index) grid, streamed row-major
//   check    internal consistency suites (lemma | identity | lifting | equivalence | all)
//   hurwitz  Hurwitz class numbers H(delta), optionally with reduced forms
//
// Exit codes: 0 success, 1 check-suite failure, 2 usage or domain error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacobidim/class_numbers.hpp"
#include "jacobidim/crosscheck.hpp"
#include "jacobidim/dimensions.hpp"
#include "jacobidim/group_data.hpp"
#include "jacobidim/parallel.hpp"
#include "jacobidim/rational.hpp"

using namespace jacobidim;
using nlohmann::json;

namespace {

// ---------- plumbing ----------

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::domain_error("cannot open output file: " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::domain_error(what + " must be an integer, got \"" + text + "\"");
    return value;
}

// "3..6" -> {3, 6}; a bare "3" means {3, 3}.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text,
                                                  const std::string& what) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::int64_t v = parse_int(text, what);
        return {v, v};
    }
    std::int64_t from = parse_int(text.substr(0, dots), what);
    std::int64_t to = parse_int(text.substr(dots + 2), what);
    if (from > to) throw std::domain_error(what + " range is empty: " + text);
    return {from, to};
}

BranchingScheme parse_group(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::domain_error(
            "group descriptor must be gammaN:<N>, gamma0:<N>, gamma1:<N>, or scheme:<path>, got \"" +
            descriptor + "\"");
    std::string kind = descriptor.substr(0, colon);
    std::string rest = descriptor.substr(colon + 1);
    if (kind == "scheme") {
        std::ifstream in(rest);
        if (!in) throw std::domain_error("cannot open scheme file: " + rest);
        std::ostringstream buf;
        buf << in.rdbuf();
        json doc;
        try {
            doc = json::parse(buf.str());
        } catch (const json::exception& e) {
            throw std::domain_error(std::string("scheme file is not valid JSON: ") + e.what());
        }
        return BranchingScheme::from_json(doc);
    }
    std::int64_t N = parse_int(rest, "group level");
    if (kind == "gammaN") return principal_congruence_scheme(N);
    if (kind == "gamma0") return gamma0_scheme(N);
    if (kind == "gamma1") return gamma1_scheme(N);
    throw std::domain_error("unknown group family \"" + kind +
                            "\" (expected gammaN, gamma0, gamma1, or scheme)");
}

// Rationals keep arbitrary precision; fall back to a string once past int64.
json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

json record_json(const std::string& group, std::int64_t k, std::int64_t m,
                 const DimensionResult& r) {
    return json{{"group", group},
                {"k", k},
                {"m", m},
                {"value", {{"num", int_to_json(r.value.num())}, {"den", int_to_json(r.value.den())}}},
                {"plain", r.plain}};
}

void emit_csv_row(std::ostream& os, const std::string& group, std::int64_t k, std::int64_t m,
                  const DimensionResult& r) {
    os << group << ',' << k << ',' << m << ',' << r.value.num().str() << ','
       << r.value.den().str() << ',' << (r.plain ? "true" : "false") << '\n';
}

constexpr const char* kCsvHeader = "group,k,m,value_num,value_den,plain";

// ---------- dim ----------

int run_dim(const std::string& group, std::int64_t k, std::int64_t m, const std::string& format,
            const std::string& out_path) {
    BranchingScheme scheme = parse_group(group);
    DimensionResult r = dim_jacobi(k, m, scheme);
    Output out(out_path);
    if (format == "text") {
        out.os() << r.value.str() << '\n';
    } else if (format == "json") {
        out.os() << record_json(group, k, m, r).dump() << '\n';
    } else {
        out.os() << kCsvHeader << '\n';
        emit_csv_row(out.os(), group, k, m, r);
    }
    return 0;
}

// ---------- table ----------

int run_table(const std::string& group, const std::string& weights, const std::string& indices,
              const std::string& format, const std::string& out_path) {
    auto [k_from, k_to] = parse_range(weights, "--weights");
    auto [m_from, m_to] = parse_range(indices, "--indices");
    BranchingScheme scheme = parse_group(group);

    std::size_t m_count = static_cast<std::size_t>(m_to - m_from + 1);
    std::size_t total = static_cast<std::size_t>(k_to - k_from + 1) * m_count;

    struct Cell {
        DimensionResult result;
        std::string error;
    };
    std::vector<Cell> cells(total);
    parallel_for(total, [&](std::size_t idx) {
        std::int64_t k = k_from + static_cast<std::int64_t>(idx / m_count);
        std::int64_t m = m_from + static_cast<std::int64_t>(idx % m_count);
        try {
            cells[idx].result = dim_jacobi(k, m, scheme);
        } catch (const std::exception& e) {
            cells[idx].error = e.what();
        }
    });
    for (const Cell& c : cells)
        if (!c.error.empty()) throw std::domain_error(c.error);

    Output out(out_path);
    if (format == "csv") out.os() << kCsvHeader << '\n';
    json rows = json::array();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::int64_t k = k_from + static_cast<std::int64_t>(idx / m_count);
        std::int64_t m = m_from + static_cast<std::int64_t>(idx % m_count);
        const DimensionResult& r = cells[idx].result;
        if (format == "csv") {
            emit_csv_row(out.os(), group, k, m, r);
        } else if (format == "json") {
            rows.push_back(record_json(group, k, m, r));
        } else {
            out.os() << group << " k=" << k << " m=" << m << ' ' << r.value.str() << '\n';
        }
    }
    if (format == "json") out.os() << rows.dump() << '\n';
    return 0;
}

// ---------- check ----------

int run_check(const std::string& suite, std::int64_t max_a, std::int64_t max_f,
              std::int64_t max_k, std::int64_t max_m, std::int64_t max_n, std::int64_t synthetic,
              const std::string& out_path) {
    std::vector<SuiteReport> reports;
    bool want_all = suite == "all";
    if (want_all || suite == "lemma") reports.push_back(run_lemma_suite(max_a, max_f));
    if (want_all || suite == "identity")
        reports.push_back(run_identity_suite(max_k > 0 ? max_k : 13, max_m > 0 ? max_m : 60));
    if (want_all || suite == "lifting") reports.push_back(run_lifting_suite());
    if (want_all || suite == "equivalence")
        reports.push_back(run_equivalence_suite(max_k > 0 ? max_k : 12, max_m > 0 ? max_m : 36,
                                                max_n, static_cast<int>(synthetic)));

    Output out(out_path);
    std::int64_t checks = 0, failures = 0;
    for (const SuiteReport& rep : reports) {
        for (const CheckLine& line : rep.lines) {
            out.os() << (line.pass ? "PASS" : "FAIL") << "  [" << rep.suite << "] " << line.label;
            if (!line.detail.empty()) out.os() << "  (" << line.detail << ")";
            out.os() << '\n';
        }
        checks += rep.checks;
        failures += rep.failures;
    }
    if (reports.size() == 1) {
        out.os() << reports.front().to_json().dump() << '\n';
    } else {
        json summary = json::array();
        for (const SuiteReport& rep : reports) summary.push_back(rep.to_json());
        out.os() << json{{"suites", summary}, {"checks", checks}, {"failures", failures}}.dump()
                 << '\n';
    }
    return failures == 0 ? 0 : 1;
}

// ---------- hurwitz ----------

int run_hurwitz(std::int64_t from, std::int64_t to, bool with_forms, const std::string& format,
                const std::string& out_path) {
    if (from > to) throw std::domain_error("--from must not exceed --to");
    if (to > 0) throw std::domain_error("hurwitz range must be nonpositive (got --to > 0)");

    Output out(out_path);
    if (format == "csv")
        out.os() << (with_forms ? "delta,h_num,h_den,forms" : "delta,h_num,h_den") << '\n';
    json rows = json::array();
    for (std::int64_t delta = from; delta <= to; ++delta) {
        Rational h = hurwitz_h1(delta);
        std::vector<ReducedForm> forms;
        std::int64_t residue = ((delta % 4) + 4) % 4;
        if (with_forms && delta < 0 && (residue == 0 || residue == 1))
            forms = enumerate_reduced_forms(delta);
        if (format == "text") {
            out.os() << "H(" << delta << ") = " << h.str();
            if (with_forms) {
                out.os() << "  forms:";
                for (const ReducedForm& f : forms)
                    out.os() << " (" << f.a << ',' << f.b << ',' << f.c << ')';
            }
            out.os() << '\n';
        } else if (format == "csv") {
            out.os() << delta << ',' << h.num().str() << ',' << h.den().str();
            if (with_forms) {
                out.os() << ",\"";
                for (std::size_t i = 0; i < forms.size(); ++i)
                    out.os() << (i ? " " : "") << '(' << forms[i].a << ',' << forms[i].b << ','
                             << forms[i].c << ')';
                out.os() << '"';
            }
            out.os() << '\n';
        } else {
            json row{{"delta", delta},
                     {"value", {{"num", int_to_json(h.num())}, {"den", int_to_json(h.den())}}}};
            if (with_forms) {
                json triples = json::array();
                for (const ReducedForm& f : forms) triples.push_back(json::array({f.a, f.b, f.c}));
                row["forms"] = triples;
            }
            rows.push_back(row);
        }
    }
    if (format == "json") out.os() << rows.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimensions of spaces of Jacobi cusp forms from branching data"};
    app.require_subcommand(1);

    std::string group, format = "text", out_path, weights, indices, suite;
    std::int64_t k = 0, m = 0;
    std::int64_t max_a = 36, max_f = 36, max_k = 0, max_m = 0, max_n = 16, synthetic = 200;
    std::int64_t from = 0, to = 0;
    bool with_forms = false;

    auto add_format = [&](CLI::App* cmd, const std::string& def) {
        format = def;
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of one space S_{k,m}");
    dim_cmd->add_option("--group", group,
                        "gammaN:<N>, gamma0:<N>, gamma1:<N>, or scheme:<path to JSON>")
        ->required();
    dim_cmd->add_option("--weight,-k", k, "weight k (>= 2)")->required();
    dim_cmd->add_option("--index,-m", m, "index m (>= 1)")->required();
    add_format(dim_cmd, "text");
    add_out(dim_cmd);

    CLI::App* table_cmd = app.add_subcommand("table", "grid of dimensions, row-major in (k, m)");
    table_cmd->add_option("--group", group, "group descriptor, as for dim")->required();
    table_cmd->add_option("--weights", weights, "weight range, e.g. 3..6")->required();
    table_cmd->add_option("--indices", indices, "index range, e.g. 1..4")->required();
    add_format(table_cmd, "text");
    add_out(table_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "run a consistency suite");
    check_cmd
        ->add_option("suite", suite, "lemma | identity | lifting | equivalence | all")
        ->required()
        ->check(CLI::IsMember({"lemma", "identity", "lifting", "equivalence", "all"}));
    check_cmd->add_option("--max-a", max_a, "lemma: largest a")->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-f", max_f, "lemma: largest f")->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-k", max_k, "identity/equivalence: largest weight")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-m", max_m, "identity/equivalence: largest index")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-n", max_n, "equivalence: largest level N")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--synthetic", synthetic, "equivalence: synthetic width lists")
        ->check(CLI::NonNegativeNumber);
    add_out(check_cmd);

    CLI::App* hurwitz_cmd = app.add_subcommand("hurwitz", "Hurwitz class numbers H(delta)");
    hurwitz_cmd->add_option("--from", from, "first discriminant (<= 0)")->required();
    hurwitz_cmd->add_option("--to", to, "last discriminant (<= 0)")->required();
    hurwitz_cmd->add_flag("--forms", with_forms, "also list the reduced forms");
    add_format(hurwitz_cmd, "text");
    add_out(hurwitz_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    }

    try {
        if (dim_cmd->parsed()) return run_dim(group, k, m, format, out_path);
        if (table_cmd->parsed()) return run_table(group, weights, indices, format, out_path);
        if (check_cmd->parsed())
            return run_check(suite, max_a, max_f, max_k, max_m, max_n, synthetic, out_path);
        return run_hurwitz(from, to, with_forms, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
