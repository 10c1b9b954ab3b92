#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qident/nome.hpp"

namespace qident::verify {

enum class Category { finite_identity, limit_claim, explicit_constant };

// How a case consumes its nome list: pointwise, or as a q -> 1 sequence
// reduced to one check per remaining grid combination.
enum class LimitMode { none, last_point, richardson };

struct NomeSpec {
    enum class Kind { from_q, from_tau };
    Kind kind = Kind::from_q;
    cplx value{0.5, 0.0};
    PowerBranch branch = PowerBranch::principal;

    LogNome make() const;
    std::string describe() const;
};

NomeSpec q_spec(cplx q, PowerBranch branch = PowerBranch::principal);
NomeSpec tau_spec(cplx tau);

struct GridSpec {
    std::vector<NomeSpec> nomes;
    std::vector<cplx> z_values;               // empty: single placeholder point
    std::vector<std::vector<int>> int_params; // empty: single empty combo
    std::uint64_t seed = 0;                   // mixed into per-point RNG streams
};

struct RunConfig {
    TruncationPolicy policy{};
    std::uint64_t seed = 20250901u;
    std::optional<double> tol_finite;
    std::optional<double> tol_limit;
    std::optional<double> tol_constant;
    // Overrides applied to cases that advertise the default grid.
    std::optional<std::vector<cplx>> q_override;
    std::optional<std::vector<cplx>> z_override;
    std::optional<std::vector<int>> int_filter; // keep combos whose first entry matches
};

struct CheckResult {
    std::string case_id;
    int point_index = 0;
    std::string params;
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    bool degraded = false;
};

struct CaseSummary {
    std::string id;
    std::string description;
    Category category = Category::finite_identity;
    int points = 0;
    int passed = 0;
    double worst_abs = 0.0;
    double worst_rel = 0.0;
    bool pass = false;
    bool expected_fail = false;
    std::string note;
};

struct Report {
    std::string suite_name;
    // Shown in the markdown summary when set; never part of the CSV, which
    // stays byte-identical across runs with the same config and seed.
    std::string timestamp;
    std::uint64_t seed = 0;
    TruncationPolicy policy{};
    std::vector<CaseSummary> cases;
    std::vector<CheckResult> results;

    bool all_pass() const;
};

std::string format_cplx(cplx v);

} // namespace qident::verify
