// hooklab command line: hook length expansions in both directions, catalog
// verification, closed-form guessing and Euler-product recognition.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hooklab/catalog.hpp"
#include "hooklab/etamake.hpp"
#include "hooklab/expr.hpp"
#include "hooklab/guess.hpp"
#include "hooklab/json_io.hpp"
#include "hooklab/trees.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

int default_order() {
    if (const char* env = std::getenv("HOOKLAB_DEFAULT_N")) {
        try {
            const int n = std::stoi(env);
            if (n >= 0) return n;
        } catch (...) {}
        std::cerr << "warning: ignoring invalid HOOKLAB_DEFAULT_N\n";
    }
    return 8;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(item);
    return out;
}

hooklab::expr::EvalEnv env_for(const std::vector<std::string>& params) {
    hooklab::expr::EvalEnv env;
    env.params = params;
    return env;
}

void check_identifiers(const hooklab::expr::ExprPtr& e, const std::vector<std::string>& params,
                       bool allow_n) {
    for (const auto& name : hooklab::expr::free_identifiers(e)) {
        if (allow_n && name == "n") continue;
        if (std::find(params.begin(), params.end(), name) != params.end()) continue;
        throw hooklab::ParseError("unknown identifier '" + name +
                                      "' (declare parameters with --param)",
                                  0);
    }
}

struct HookExpArgs {
    std::string type = "PA";
    std::string f;
    int order = -1;
    std::vector<std::string> params;
};

int run_hookexp(const HookExpArgs& a, bool json) {
    const auto kind = hooklab::parse_structure(a.type);
    const auto ast = hooklab::expr::parse(a.f);
    check_identifiers(ast, a.params, false);
    const int n = a.order >= 0 ? a.order : default_order();
    const auto series = hooklab::expr::eval_series(ast, n, env_for(a.params));
    try {
        const auto rho = hooklab::hookexp(kind, series, n);
        std::cout << (json ? hooklab::weight_table_json(rho) : hooklab::to_string(rho)) << "\n";
    } catch (const hooklab::ExpansionError& err) {
        if (json) {
            std::cout << "{\"error\":\"" << err.what()
                      << "\",\"partial\":" << hooklab::weight_table_json(err.partial) << "}\n";
        } else {
            std::cout << err.what() << "\n" << hooklab::to_string(err.partial) << "\n";
        }
        return kExitDomain;
    }
    return kExitOk;
}

struct HookGenArgs {
    std::string type = "PA";
    std::string rho_list;
    std::string rho_expr;
    int order = -1;
    std::vector<std::string> params;
};

int run_hookgen(const HookGenArgs& a, bool json) {
    const auto kind = hooklab::parse_structure(a.type);
    hooklab::WeightTable rho;
    int n = a.order;
    if (!a.rho_list.empty()) {
        for (const auto& item : split_list(a.rho_list)) {
            const auto ast = hooklab::expr::parse(item);
            check_identifiers(ast, a.params, false);
            rho.values.push_back(hooklab::expr::eval_ratfun(ast, env_for(a.params)));
        }
        if (n < 0) n = rho.size();
        if (n > rho.size())
            throw hooklab::DomainError("weight list has " + std::to_string(rho.size()) +
                                       " entries but order " + std::to_string(n) + " was requested");
    } else {
        if (n < 0) n = default_order();
        const auto ast = hooklab::expr::parse(a.rho_expr);
        check_identifiers(ast, a.params, true);
        for (int h = 1; h <= n; ++h) {
            auto env = env_for(a.params);
            env.bindings["n"] = hooklab::RatFun(hooklab::Rational(h));
            rho.values.push_back(hooklab::expr::eval_ratfun(ast, env));
        }
    }
    const auto f = hooklab::hookgen(kind, rho, n);
    std::cout << (json ? hooklab::series_json(f) : hooklab::to_string(f)) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string id;
    int order = 0;
    int jobs = 1;
};

int run_verify(const VerifyArgs& a, bool json) {
    const auto summary = hooklab::catalog::verify_all(a.order, a.jobs, a.id);

    if (json) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < summary.reports.size(); ++i) {
            const auto& r = summary.reports[i];
            if (i) os << ",";
            os << "{\"id\":\"" << r.id << "\",\"status\":\"" << status_name(r.status)
               << "\",\"order\":" << r.order << ",\"pass\":" << (r.pass ? "true" : "false") << "}";
        }
        os << "]";
        std::cout << os.str() << "\n";
    } else {
        std::map<std::string, std::pair<int, int>> sections;  // section -> {pass, fail}
        for (const auto& r : summary.reports) {
            std::string line = r.pass ? "PASS " : "FAIL ";
            line += r.id;
            if (r.status == hooklab::catalog::FormulaStatus::Conjecture)
                line += r.pass ? " (conjecture: numerically verified only)" : " (conjecture)";
            if (!r.error.empty()) line += "  error: " + r.error;
            for (const auto& res : r.results) {
                if (res.pass) continue;
                line += "  [" + (res.label.empty() ? std::string("mismatch") : res.label) +
                        " at x^" + std::to_string(res.mismatch_index) + ": " + res.lhs +
                        " != " + res.rhs + "]";
            }
            std::cout << line << "\n";
            const auto us = r.id.find('_');
            const std::string section = us == std::string::npos
                ? r.id : r.id.substr(us + 1, r.id.find('_', us + 1) - us - 1);
            auto& [pass, fail] = sections[section];
            (r.pass ? pass : fail) += 1;
        }
        std::cout << "sections:";
        for (const auto& [sec, counts] : sections)
            std::cout << " " << sec << ": " << counts.first << " pass/" << counts.second << " fail;";
        std::cout << "\ntotal: " << summary.passed << " passed, " << summary.failed << " failed";
        if (summary.conjectures_failed)
            std::cout << ", " << summary.conjectures_failed << " conjecture(s) not matching";
        std::cout << "\n";
    }
    return summary.ok() ? kExitOk : kExitVerify;
}

struct GuessArgs {
    std::string values;
    long n0 = 1;
    bool hyper = false;
};

int run_guess(const GuessArgs& a, bool json) {
    std::vector<hooklab::Rational> values;
    for (auto item : split_list(a.values)) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        values.push_back(hooklab::Rational::parse(item));
    }
    const auto cf = a.hyper ? hooklab::guess_hypergeometric(values, a.n0)
                            : hooklab::guess_rational(values, a.n0);
    if (!cf) {
        std::cout << (a.hyper ? "no hypergeometric closed form found"
                              : "no rational closed form found")
                  << "\n";
        return kExitVerify;
    }
    std::cout << (json ? hooklab::closed_form_json(*cf) : cf->text) << "\n";
    return kExitOk;
}

struct EtaArgs {
    std::string f;
    int order = -1;
    std::vector<std::string> params;
};

int run_etamake(const EtaArgs& a, bool json) {
    const int n = a.order >= 0 ? a.order : default_order();
    const auto ast = hooklab::expr::parse(a.f);
    check_identifiers(ast, a.params, false);
    const auto series = hooklab::expr::eval_series(ast, n, env_for(a.params));
    const auto exponents = hooklab::euler_exponents(series, n);
    const auto q = hooklab::eta_from_exponents(exponents);
    for (const auto& [k, e] : exponents) {
        if (k > n / 2 && !e.is_zero()) {
            std::cerr << "warning: nonzero exponent at k=" << k << " > n/2"
                      << " is unconfirmed by higher coefficients; increase --n\n";
            break;
        }
    }
    if (!q.integral())
        std::cerr << "note: non-integer exponents; not an eta quotient\n";
    std::cout << (json ? hooklab::eta_json(q) : hooklab::render_eta(q)) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hooklab: exact hook length expansions for partitions and plane trees"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    HookExpArgs hx;
    auto* hookexp_cmd =
        app.add_subcommand("hookexp", "weight table of a generating function");
    hookexp_cmd->add_option("--type", hx.type, "structure: PA, BT, CBT or FT");
    hookexp_cmd->add_option("--f", hx.f, "generating function expression")->required();
    hookexp_cmd->add_option("--n", hx.order, "number of weights to compute");
    hookexp_cmd->add_option("--param", hx.params, "declare a symbolic parameter");

    HookGenArgs hg;
    auto* hookgen_cmd =
        app.add_subcommand("hookgen", "generating function of a weight table");
    hookgen_cmd->add_option("--type", hg.type, "structure: PA, BT, CBT or FT");
    auto* rho_list =
        hookgen_cmd->add_option("--rho-list", hg.rho_list, "comma-separated weights rho(1..N)");
    hookgen_cmd->add_option("--rho-expr", hg.rho_expr, "weight formula in n, evaluated at 1..N")
        ->excludes(rho_list);
    hookgen_cmd->add_option("--n", hg.order, "truncation order");
    hookgen_cmd->add_option("--param", hg.params, "declare a symbolic parameter");

    VerifyArgs vf;
    auto* verify_cmd = app.add_subcommand("verify", "check built-in formula entries");
    verify_cmd->add_option("--id", vf.id, "verify a single entry");
    verify_cmd->add_option("--n", vf.order, "override the truncation order");
    verify_cmd->add_option("--jobs", vf.jobs, "worker threads");

    GuessArgs gs;
    auto* guess_cmd = app.add_subcommand("guess", "closed form of a rational sequence");
    guess_cmd->add_option("--values", gs.values, "comma-separated rational values")->required();
    guess_cmd->add_option("--n0", gs.n0, "index of the first value (default 1)");
    guess_cmd->add_flag("--hyper", gs.hyper, "guess a hypergeometric term instead");

    EtaArgs et;
    auto* eta_cmd = app.add_subcommand("etamake", "eta-quotient form of a series");
    eta_cmd->add_option("--f", et.f, "series expression with constant term 1")->required();
    eta_cmd->add_option("--n", et.order, "truncation order");
    eta_cmd->add_option("--param", et.params, "declare a symbolic parameter");

    auto* catalog_cmd = app.add_subcommand("catalog", "dump the formula catalog as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (hookexp_cmd->parsed()) return run_hookexp(hx, json);
        if (hookgen_cmd->parsed()) {
            if (hg.rho_list.empty() && hg.rho_expr.empty())
                throw hooklab::ParseError("hookgen needs --rho-list or --rho-expr", 0);
            return run_hookgen(hg, json);
        }
        if (verify_cmd->parsed()) return run_verify(vf, json);
        if (guess_cmd->parsed()) return run_guess(gs, json);
        if (eta_cmd->parsed()) return run_etamake(et, json);
        if (catalog_cmd->parsed()) {
            std::cout << hooklab::catalog::catalog_json() << "\n";
            return kExitOk;
        }
    } catch (const hooklab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << " (position " << e.position << ")\n";
        return kExitParse;
    } catch (const hooklab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
