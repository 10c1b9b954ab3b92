// qident: evaluate the q-series special functions and run the identity
// verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "qident/arith.hpp"
#include "qident/qgamma.hpp"
#include "qident/qseries.hpp"
#include "qident/qtrig.hpp"
#include "qident/theta.hpp"
#include "qident/verify/config.hpp"
#include "qident/verify/registry.hpp"
#include "qident/verify/report.hpp"

namespace {

using namespace qident;

cplx parse_cplx_arg(const std::string& s) {
    std::istringstream in(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw std::invalid_argument("cannot parse number: " + s);
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw std::invalid_argument("cannot parse complex value: " + s);
    }
    return {re, im};
}

std::string show(cplx v) {
    char buf[96];
    if (v.imag() == 0.0)
        std::snprintf(buf, sizeof(buf), "%.15g", v.real());
    else
        std::snprintf(buf, sizeof(buf), "%.15g %+.15gi", v.real(), v.imag());
    return buf;
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_list() {
    for (const verify::IdentityCase& c : verify::registry())
        std::printf("%-4s %s\n", c.id.c_str(), c.description.c_str());
    return 0;
}

struct VerifyOptions {
    std::string ids;
    std::string config_path;
    std::string format = "markdown";
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> eps;
    std::optional<double> tol;
};

int cmd_verify(const VerifyOptions& opt) {
    verify::RunConfig cfg;
    try {
        if (!opt.config_path.empty()) cfg = verify::load_config_file(opt.config_path);
        if (opt.seed) cfg.seed = *opt.seed;
        if (opt.eps) {
            if (!(*opt.eps > 0.0)) throw verify::config_error("--eps must be positive");
            cfg.policy.epsilon = *opt.eps;
        }
        if (opt.tol) {
            if (!(*opt.tol > 0.0)) throw verify::config_error("--tol must be positive");
            cfg.tol_finite = *opt.tol;
        }
        std::vector<std::string> ids = split_ids(opt.ids);
        if (ids.empty())
            for (const verify::IdentityCase& c : verify::registry()) ids.push_back(c.id);
        for (const std::string& id : ids) verify::find_case(id); // validate up front

        const verify::Report rep = verify::run_suite(ids, cfg);
        const verify::ReportFormat fmt = opt.format == "csv" ? verify::ReportFormat::csv
                                                             : verify::ReportFormat::markdown;
        const std::string text = verify::emit_report(rep, fmt);
        if (opt.out_path.empty()) {
            std::fputs(text.c_str(), stdout);
        } else {
            std::ofstream out(opt.out_path, std::ios::binary);
            if (!out) throw verify::config_error("cannot open output file: " + opt.out_path);
            out << text;
        }
        return rep.all_pass() ? 0 : 1;
    } catch (const verify::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const verify::unknown_case_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
}

struct EvalOptions {
    std::string function;
    std::vector<std::string> args;
    std::string q_str;
    std::string tau_str;
    std::string branch = "principal";
};

int cmd_eval(const EvalOptions& opt) {
    try {
        const PowerBranch branch = opt.branch == "real-root" ? PowerBranch::real_root
                                                             : PowerBranch::principal;
        std::optional<LogNome> nome;
        if (!opt.tau_str.empty())
            nome = LogNome::from_tau(parse_cplx_arg(opt.tau_str));
        else if (!opt.q_str.empty())
            nome = LogNome::from_q(parse_cplx_arg(opt.q_str), branch);
        if (!nome) throw std::invalid_argument("eval needs --q or --tau");

        const TruncationPolicy policy{};
        auto arg_at = [&](size_t i) -> cplx {
            if (i >= opt.args.size())
                throw std::invalid_argument("missing argument for " + opt.function);
            return parse_cplx_arg(opt.args[i]);
        };

        cplx value;
        if (opt.function == "theta1") {
            value = theta1(arg_at(0), *nome, policy);
        } else if (opt.function == "qgamma") {
            value = q_gamma(arg_at(0), *nome, policy);
        } else if (opt.function == "sinq") {
            value = sin_q_theta(arg_at(0), *nome, policy);
        } else if (opt.function == "psi") {
            value = ramanujan_psi(*nome, policy);
        } else if (opt.function == "pq") {
            value = pq_direct(static_cast<int>(arg_at(0).real()), *nome, policy);
        } else if (opt.function == "lambdaq") {
            value = q_von_mangoldt(static_cast<int>(arg_at(0).real()), *nome, policy);
        } else {
            throw std::invalid_argument("unknown function: " + opt.function +
                                        " (expected theta1|qgamma|sinq|psi|pq|lambdaq)");
        }
        std::printf("%s\n", show(value).c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series special functions and identity verification"};
    app.require_subcommand(1);

    app.add_subcommand("list", "print registry ids and descriptions");

    VerifyOptions vopt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suite");
    verify_cmd->add_option("--ids", vopt.ids, "comma-separated ids (default: all)");
    verify_cmd->add_option("--config", vopt.config_path, "JSON config file");
    verify_cmd->add_option("--format", vopt.format, "csv or markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    verify_cmd->add_option("--out", vopt.out_path, "output path (default: stdout)");
    std::uint64_t seed_arg = 0;
    CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed_arg, "RNG seed");
    double eps_arg = 0.0;
    CLI::Option* eps_opt = verify_cmd->add_option("--eps", eps_arg, "truncation epsilon");
    double tol_arg = 0.0;
    CLI::Option* tol_opt =
        verify_cmd->add_option("--tol", tol_arg, "finite-identity tolerance");

    EvalOptions eopt;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a single function");
    eval_cmd->add_option("function", eopt.function,
                         "theta1|qgamma|sinq|psi|pq|lambdaq")->required();
    eval_cmd->add_option("args", eopt.args, "function arguments (re or re,im)");
    eval_cmd->add_option("--q", eopt.q_str, "nome q as re or re,im");
    eval_cmd->add_option("--tau", eopt.tau_str, "modular parameter as re,im");
    eval_cmd->add_option("--branch", eopt.branch, "principal or real-root")
        ->check(CLI::IsMember({"principal", "real-root"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand("verify")) {
        if (*seed_opt) vopt.seed = seed_arg;
        if (*eps_opt) vopt.eps = eps_arg;
        if (*tol_opt) vopt.tol = tol_arg;
        return cmd_verify(vopt);
    }
    if (app.got_subcommand("eval")) return cmd_eval(eopt);
    return 2;
}
