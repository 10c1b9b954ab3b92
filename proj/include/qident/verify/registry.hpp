#pragma once

#include <functional>
#include <random>

#include "qident/verify/types.hpp"

namespace qident::verify {

struct unknown_case_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointContext {
    LogNome nome;
    cplx z;
    std::vector<int> ints;
    TruncationPolicy policy;
    std::mt19937_64& rng;
    EvalStatus* status = nullptr;
    std::string* note = nullptr; // case-level notes; append sparingly
};

struct PointValue {
    cplx lhs;
    cplx rhs;
};

using PointEval = std::function<PointValue(PointContext&)>;

struct IdentityCase {
    std::string id;
    std::string description;
    Category category = Category::finite_identity;
    GridSpec domain;
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
    LimitMode limit_mode = LimitMode::none;
    // Expected-fail semantics (the published-formula counterexample): a point
    // passes only when its residual exceeds fail_threshold.
    bool expect_fail = false;
    double fail_threshold = 1e-3;
    bool uses_default_grid = false;
    // Limit claims need far more product terms than the default cap allows.
    std::optional<TruncationPolicy> policy_override;
    PointEval eval;
};

const std::vector<IdentityCase>& registry();
const IdentityCase& find_case(const std::string& id);

std::vector<CheckResult> run_identity(const IdentityCase& c, const RunConfig& cfg,
                                      std::string* note = nullptr);
std::vector<CheckResult> run_identity(const std::string& id, const RunConfig& cfg);

Report run_suite(const std::vector<std::string>& ids, const RunConfig& cfg);
Report run_full_suite(const RunConfig& cfg);

} // namespace qident::verify
