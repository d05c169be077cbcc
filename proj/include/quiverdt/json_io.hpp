#pragma once

#include <nlohmann/json.hpp>

#include "quiverdt/laurent.hpp"

namespace quiverdt {

/// {"variable": "q^(1/2)", "terms": [[exponent_in_v, "coeff"], ...]} sorted by
/// exponent; coefficients as integer (or rational) strings, no floats.
inline nlohmann::json laurent_to_json(const Laurent& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : f.terms()) terms.push_back({e, rat_to_string(c)});
    return {{"variable", "q^(1/2)"}, {"terms", terms}};
}

inline Laurent laurent_from_json(const nlohmann::json& j) {
    Laurent f;
    for (const auto& t : j.at("terms"))
        f = f + Laurent::monomial(t.at(0).get<int>(), rat_from_string(t.at(1).get<std::string>()));
    return f;
}

}  // namespace quiverdt
