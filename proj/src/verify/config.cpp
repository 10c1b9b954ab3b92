#include "qident/verify/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qident::verify {

namespace {

using nlohmann::json;

cplx parse_cplx(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw config_error("expected a number or [re, im] pair");
}

} // namespace

RunConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config root must be an object");

    RunConfig cfg;
    try {
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("policy")) {
            const json& p = j.at("policy");
            if (p.contains("epsilon")) cfg.policy.epsilon = p.at("epsilon").get<double>();
            if (p.contains("max_terms")) cfg.policy.max_terms = p.at("max_terms").get<int>();
            if (!(cfg.policy.epsilon > 0.0) || cfg.policy.max_terms < 1)
                throw config_error("policy: need epsilon > 0 and max_terms >= 1");
        }
        if (j.contains("tolerances")) {
            const json& t = j.at("tolerances");
            if (t.contains("finite")) cfg.tol_finite = t.at("finite").get<double>();
            if (t.contains("limit")) cfg.tol_limit = t.at("limit").get<double>();
            if (t.contains("constant")) cfg.tol_constant = t.at("constant").get<double>();
        }
        if (j.contains("grid")) {
            const json& g = j.at("grid");
            if (g.contains("q_values")) {
                std::vector<cplx> qs;
                for (const json& v : g.at("q_values")) {
                    const cplx q = parse_cplx(v);
                    if (!(std::abs(q) > 0.0) || !(std::abs(q) < 1.0))
                        throw config_error("grid.q_values: need 0 < |q| < 1");
                    qs.push_back(q);
                }
                if (qs.empty()) throw config_error("grid.q_values: must be nonempty");
                cfg.q_override = std::move(qs);
            }
            if (g.contains("z_values")) {
                std::vector<cplx> zs;
                for (const json& v : g.at("z_values")) zs.push_back(parse_cplx(v));
                if (zs.empty()) throw config_error("grid.z_values: must be nonempty");
                cfg.z_override = std::move(zs);
            }
            if (g.contains("integer_params")) {
                std::vector<int> is;
                for (const json& v : g.at("integer_params")) is.push_back(v.get<int>());
                if (is.empty()) throw config_error("grid.integer_params: must be nonempty");
                cfg.int_filter = std::move(is);
            }
        }
    } catch (const json::exception& e) {
        throw config_error(std::string("config error: ") + e.what());
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_json(ss.str());
}

} // namespace qident::verify
