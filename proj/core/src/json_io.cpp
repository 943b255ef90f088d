#include "hooklab/json_io.hpp"

#include "hooklab/expr.hpp"

#include "json.hpp"

namespace hooklab {

std::string weight_table_json(const WeightTable& w) {
    nlohmann::json j;
    j["values"] = nlohmann::json::array();
    for (const auto& v : w.values) j["values"].push_back(v.str());
    j["undetermined"] = w.undetermined;
    return j.dump();
}

WeightTable weight_table_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    WeightTable w;
    for (const auto& s : j.at("values")) {
        const std::string src = s.get<std::string>();
        expr::EvalEnv env;
        const auto e = expr::parse(src);
        for (const auto& name : expr::free_identifiers(e)) env.params.push_back(name);
        w.values.push_back(expr::eval_ratfun(e, env));
    }
    if (j.contains("undetermined")) w.undetermined = j.at("undetermined").get<std::vector<int>>();
    return w;
}

std::string series_json(const TruncSeries& s) {
    nlohmann::json j;
    j["order"] = s.order();
    j["coeffs"] = nlohmann::json::array();
    for (int k = 0; k <= s.order(); ++k) j["coeffs"].push_back(s[k].str());
    return j.dump();
}

std::string closed_form_json(const ClosedForm& cf) {
    nlohmann::json j;
    j["level"] = cf.level;
    j["n0"] = cf.base_index;
    j["ratfun"] = cf.ratfun.str();
    if (cf.level == 1) j["base"] = cf.base_value.str();
    j["text"] = cf.text;
    return j.dump();
}

std::string eta_json(const EtaQuotient& q) {
    nlohmann::json j;
    j["exponents"] = nlohmann::json::object();
    for (const auto& [k, e] : q.exponents) j["exponents"][std::to_string(k)] = e.str();
    j["prefactor"] = q.prefactor.str();
    j["eta"] = render_eta(q);
    j["is_eta_quotient"] = q.integral();
    return j.dump();
}

} // namespace hooklab
