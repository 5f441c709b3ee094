#include "jacobidim/group_data.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "jacobidim/arith.hpp"

namespace jacobidim {

void BranchingScheme::validate() const {
    for (std::int64_t w : regular_cusp_widths)
        if (w < 1) throw std::domain_error("BranchingScheme: cusp widths must be >= 1");
    for (std::int64_t w : irregular_cusp_widths)
        if (w < 1) throw std::domain_error("BranchingScheme: cusp widths must be >= 1");
    if (regular_cusp_widths.empty() && irregular_cusp_widths.empty())
        throw std::domain_error("BranchingScheme: at least one cusp is required");
    if (contains_minus_one && !irregular_cusp_widths.empty())
        throw std::domain_error(
            "BranchingScheme: irregular cusps cannot occur when -1 is in the group");
    if (e0 < 0 || e1 < 0)
        throw std::domain_error("BranchingScheme: elliptic orbit counts must be >= 0");
    if (!contains_minus_one && e0 != 0)
        throw std::domain_error("BranchingScheme: e0 > 0 requires -1 in the group");
}

std::int64_t BranchingScheme::psl_index() const {
    std::int64_t total = 0;
    for (std::int64_t w : regular_cusp_widths) total += w;
    for (std::int64_t w : irregular_cusp_widths) total += w;
    return total;
}

nlohmann::json BranchingScheme::to_json() const {
    return nlohmann::json{{"minus_one", contains_minus_one},
                          {"regular_widths", regular_cusp_widths},
                          {"irregular_widths", irregular_cusp_widths},
                          {"e0", e0},
                          {"e1", e1}};
}

BranchingScheme BranchingScheme::from_json(const nlohmann::json& j) {
    BranchingScheme s;
    try {
        s.contains_minus_one = j.at("minus_one").get<bool>();
        s.regular_cusp_widths = j.at("regular_widths").get<std::vector<std::int64_t>>();
        s.irregular_cusp_widths = j.at("irregular_widths").get<std::vector<std::int64_t>>();
        s.e0 = j.at("e0").get<std::int64_t>();
        s.e1 = j.at("e1").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error(std::string("BranchingScheme: bad JSON: ") + e.what());
    }
    s.validate();
    return s;
}

namespace {

// [SL2(Z) : Gamma(N)] = N^3 * prod_{p | N} (1 - p^-2).
std::int64_t sl2_index_principal(std::int64_t N) {
    std::int64_t idx = N * N * N;
    for (auto [p, e] : factorize(N)) idx = idx / (p * p) * (p * p - 1);
    return idx;
}

// [SL2(Z) : Gamma_1(N)] = N^2 * prod_{p | N} (1 - p^-2).
std::int64_t sl2_index_gamma1(std::int64_t N) {
    std::int64_t idx = N * N;
    for (auto [p, e] : factorize(N)) idx = idx / (p * p) * (p * p - 1);
    return idx;
}

void check_psl_index(const BranchingScheme& s, std::int64_t expected, const char* who) {
    if (s.psl_index() != expected)
        throw std::logic_error(std::string(who) + ": cusp widths sum to " +
                               std::to_string(s.psl_index()) + ", expected PSL2 index " +
                               std::to_string(expected));
}

}  // namespace

BranchingScheme principal_congruence_scheme(std::int64_t N) {
    if (N < 1) throw std::domain_error("principal_congruence_scheme: N must be >= 1");
    BranchingScheme s;
    if (N == 1) {
        s.contains_minus_one = true;
        s.regular_cusp_widths = {1};
        s.e0 = 1;
        s.e1 = 1;
    } else if (N == 2) {
        s.contains_minus_one = true;
        s.regular_cusp_widths = {2, 2, 2};
    } else {
        s.contains_minus_one = false;
        std::int64_t count = euler_phi(N) * psi_index(N) / 2;
        s.regular_cusp_widths.assign(static_cast<std::size_t>(count), N);
    }
    s.validate();
    // -1 is only in Gamma(N) for N <= 2, where SL2 and PSL2 indices agree.
    std::int64_t sl = sl2_index_principal(N);
    check_psl_index(s, N >= 3 ? sl / 2 : sl, "principal_congruence_scheme");
    return s;
}

BranchingScheme gamma0_scheme(std::int64_t N) {
    if (N < 1) throw std::domain_error("gamma0_scheme: N must be >= 1");
    BranchingScheme s;
    s.contains_minus_one = true;
    for (std::int64_t c : divisors(N)) {
        std::int64_t mult = euler_phi(gcd(c, N / c));
        std::int64_t width = N / gcd(c * c, N);
        for (std::int64_t i = 0; i < mult; ++i) s.regular_cusp_widths.push_back(width);
    }
    if (N % 4 == 0) {
        s.e0 = 0;
    } else {
        s.e0 = 1;
        for (auto [p, e] : factorize(N))
            if (p != 2) s.e0 *= 1 + kronecker_symbol(-1, p);
    }
    if (N % 9 == 0) {
        s.e1 = 0;
    } else {
        s.e1 = 1;
        for (auto [p, e] : factorize(N)) s.e1 *= 1 + kronecker_symbol(-3, p);
    }
    s.validate();
    check_psl_index(s, psi_index(N), "gamma0_scheme");
    return s;
}

BranchingScheme gamma1_scheme(std::int64_t N) {
    if (N < 1) throw std::domain_error("gamma1_scheme: N must be >= 1");
    if (N <= 2) return gamma0_scheme(N);
    BranchingScheme s;
    s.contains_minus_one = false;
    if (N == 3) {
        s.regular_cusp_widths = {1, 3};
        s.e1 = 1;
    } else if (N == 4) {
        s.regular_cusp_widths = {1, 4};
        s.irregular_cusp_widths = {1};
    } else {
        for (std::int64_t d : divisors(N)) {
            std::int64_t mult = euler_phi(d) * euler_phi(N / d) / 2;
            std::int64_t width = N / d;
            for (std::int64_t i = 0; i < mult; ++i) s.regular_cusp_widths.push_back(width);
        }
    }
    s.validate();
    check_psl_index(s, sl2_index_gamma1(N) / 2, "gamma1_scheme");
    return s;
}

}  // namespace jacobidim
