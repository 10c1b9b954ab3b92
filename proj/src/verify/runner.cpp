#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qident/verify/registry.hpp"

namespace qident::verify {

namespace {

double resolve_tol(const RunConfig& cfg, const IdentityCase& c, bool relative) {
    std::optional<double> o;
    switch (c.category) {
        case Category::finite_identity: o = cfg.tol_finite; break;
        case Category::limit_claim: o = cfg.tol_limit; break;
        case Category::explicit_constant: o = cfg.tol_constant; break;
    }
    if (o) return *o;
    return relative ? c.tol_rel : c.tol_abs;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& id, int index) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (char ch : id) h = (h ^ std::uint64_t(static_cast<unsigned char>(ch))) * 0x100000001b3ull;
    h ^= std::uint64_t(index) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

double rel_err_of(cplx lhs, cplx rhs, double abs_err) {
    const double denom = std::max(std::abs(lhs), std::abs(rhs));
    if (denom == 0.0) return 0.0;
    if (rhs == cplx(0.0, 0.0)) return abs_err; // residual-vs-zero checks
    return abs_err / denom;
}

// Polynomial extrapolation of (h_i, v_i) to h = 0 (Neville).
cplx neville_at_zero(std::vector<double> h, std::vector<cplx> v) {
    const size_t n = h.size();
    for (size_t level = 1; level < n; ++level)
        for (size_t i = 0; i + level < n; ++i)
            v[i] = (h[i + level] * v[i] - h[i] * v[i + 1]) / (h[i + level] - h[i]);
    return v[0];
}

std::string ints_string(const std::vector<int>& ints) {
    std::string s;
    for (size_t i = 0; i < ints.size(); ++i) {
        s += (i ? "/" : ""); // keep params free of commas for the CSV
        s += std::to_string(ints[i]);
    }
    return s;
}

CheckResult make_result(const IdentityCase& c, int index, std::string params,
                        cplx lhs, cplx rhs, double tol_abs, double tol_rel,
                        bool degraded) {
    CheckResult r;
    r.case_id = c.id;
    r.point_index = index;
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = rel_err_of(lhs, rhs, r.abs_err);
    r.degraded = degraded;
    if (c.expect_fail)
        r.pass = r.abs_err > c.fail_threshold && !degraded;
    else
        r.pass = (r.abs_err < tol_abs || r.rel_err < tol_rel) && !degraded;
    return r;
}

CheckResult error_result(const IdentityCase& c, int index, std::string params,
                         const char* what) {
    CheckResult r;
    r.case_id = c.id;
    r.point_index = index;
    r.params = std::move(params) + ";error=" + what;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.lhs = r.rhs = cplx(nan, nan);
    r.abs_err = r.rel_err = nan;
    r.pass = false;
    return r;
}

} // namespace

std::vector<CheckResult> run_identity(const IdentityCase& c, const RunConfig& cfg,
                                      std::string* note) {
    GridSpec grid = c.domain;
    if (c.uses_default_grid) {
        if (cfg.q_override) {
            grid.nomes.clear();
            for (cplx q : *cfg.q_override) grid.nomes.push_back(q_spec(q));
        }
        if (cfg.z_override && !grid.z_values.empty()) grid.z_values = *cfg.z_override;
        if (cfg.int_filter && !grid.int_params.empty()) {
            std::vector<std::vector<int>> kept;
            for (const auto& combo : grid.int_params)
                if (!combo.empty() &&
                    std::find(cfg.int_filter->begin(), cfg.int_filter->end(), combo[0]) !=
                        cfg.int_filter->end())
                    kept.push_back(combo);
            grid.int_params = std::move(kept);
        }
    }

    const std::vector<cplx> zs = grid.z_values.empty()
                                     ? std::vector<cplx>{cplx(0.0, 0.0)}
                                     : grid.z_values;
    const std::vector<std::vector<int>> ints =
        grid.int_params.empty() ? std::vector<std::vector<int>>{{}} : grid.int_params;
    const double tol_abs = resolve_tol(cfg, c, false);
    const double tol_rel = resolve_tol(cfg, c, true);
    const TruncationPolicy policy = c.policy_override ? *c.policy_override : cfg.policy;

    std::vector<CheckResult> out;
    int index = 0;

    if (c.limit_mode == LimitMode::none) {
        for (const NomeSpec& ns : grid.nomes) {
            for (const cplx& z : zs) {
                for (const auto& combo : ints) {
                    std::string params = "nome=" + ns.describe() + ";z=" + format_cplx(z);
                    if (!combo.empty()) params += ";n=" + ints_string(combo);
                    std::mt19937_64 rng(mix_seed(cfg.seed ^ grid.seed, c.id, index));
                    EvalStatus st;
                    PointContext ctx{ns.make(), z, combo, policy, rng, &st, note};
                    try {
                        const PointValue v = c.eval(ctx);
                        out.push_back(make_result(c, index, std::move(params), v.lhs, v.rhs,
                                                  tol_abs, tol_rel, st.cap_hit));
                    } catch (const std::exception& e) {
                        out.push_back(error_result(c, index, std::move(params), e.what()));
                    }
                    ++index;
                }
            }
        }
        return out;
    }

    // Limit claim: the nome list is a q -> 1 sequence; one check per (z, ints).
    for (const cplx& z : zs) {
        for (const auto& combo : ints) {
            std::vector<double> hs;
            std::vector<cplx> vals;
            cplx target(0.0, 0.0);
            bool degraded = false;
            std::string params;
            bool errored = false;
            for (size_t j = 0; j < grid.nomes.size(); ++j) {
                const NomeSpec& ns = grid.nomes[j];
                std::mt19937_64 rng(mix_seed(cfg.seed ^ grid.seed, c.id, index));
                EvalStatus st;
                PointContext ctx{ns.make(), z, combo, policy, rng, &st, note};
                try {
                    const PointValue v = c.eval(ctx);
                    vals.push_back(v.lhs);
                    hs.push_back(1.0 - ctx.nome.abs_q());
                    target = v.rhs;
                    degraded = degraded || st.cap_hit;
                } catch (const std::exception& e) {
                    params = "seq;n=" + ints_string(combo);
                    out.push_back(error_result(c, index, std::move(params), e.what()));
                    errored = true;
                    break;
                }
            }
            if (errored) {
                ++index;
                continue;
            }
            const cplx estimate = c.limit_mode == LimitMode::richardson
                                      ? neville_at_zero(hs, vals)
                                      : vals.back();
            params = std::string(c.limit_mode == LimitMode::richardson ? "extrapolated"
                                                                       : "q->1 endpoint");
            if (!combo.empty()) params += ";n=" + ints_string(combo);
            if (!zs.empty() && grid.z_values.size() > 1) params += ";z=" + format_cplx(z);
            out.push_back(make_result(c, index, std::move(params), estimate, target,
                                      tol_abs, tol_rel, degraded));
            ++index;
        }
    }
    return out;
}

std::vector<CheckResult> run_identity(const std::string& id, const RunConfig& cfg) {
    return run_identity(find_case(id), cfg);
}

Report run_suite(const std::vector<std::string>& ids, const RunConfig& cfg) {
    if (ids.empty()) throw std::invalid_argument("run_suite: id list must be nonempty");
    Report rep;
    rep.suite_name = "qident";
    rep.seed = cfg.seed;
    rep.policy = cfg.policy;
    for (const std::string& id : ids) {
        const IdentityCase& c = find_case(id);
        std::string note;
        std::vector<CheckResult> results = run_identity(c, cfg, &note);
        CaseSummary s;
        s.id = c.id;
        s.description = c.description;
        s.category = c.category;
        s.points = static_cast<int>(results.size());
        s.expected_fail = c.expect_fail;
        s.note = std::move(note);
        for (const CheckResult& r : results) {
            if (r.pass) ++s.passed;
            if (std::isfinite(r.abs_err)) s.worst_abs = std::max(s.worst_abs, r.abs_err);
            if (std::isfinite(r.rel_err)) s.worst_rel = std::max(s.worst_rel, r.rel_err);
        }
        s.pass = s.passed == s.points;
        rep.cases.push_back(std::move(s));
        rep.results.insert(rep.results.end(), results.begin(), results.end());
    }
    return rep;
}

Report run_full_suite(const RunConfig& cfg) {
    std::vector<std::string> ids;
    for (const IdentityCase& c : registry()) ids.push_back(c.id);
    return run_suite(ids, cfg);
}

bool Report::all_pass() const {
    for (const CaseSummary& c : cases)
        if (!c.pass) return false;
    return true;
}

} // namespace qident::verify
