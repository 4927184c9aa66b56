#include "kochenlab/jsonio.hpp"

namespace kochenlab {

json mpoly_to_json(const MPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["exps"] = e;
        t["coef"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    json j;
    j["arity"] = f.arity();
    j["terms"] = std::move(terms);
    return j;
}

MPoly mpoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("terms"))
        throw input_error("polynomial JSON needs 'arity' and 'terms'");
    if (!j["arity"].is_number_integer() || j["arity"].get<long long>() < 0)
        throw input_error("polynomial arity must be a nonnegative integer");
    int arity = j["arity"].get<int>();
    MPoly f(arity);
    if (!j["terms"].is_array()) throw input_error("polynomial 'terms' must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exps") || !t.contains("coef"))
            throw input_error("polynomial term needs 'exps' and 'coef'");
        std::vector<int> e;
        for (const auto& x : t["exps"]) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw input_error("term exponents must be nonnegative integers");
            e.push_back(x.get<int>());
        }
        f.add_term(e, rat_from_string(t["coef"].get<std::string>()));
    }
    return f;
}

} // namespace kochenlab
