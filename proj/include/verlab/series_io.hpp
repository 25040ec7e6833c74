#pragma once

#include <json.hpp>

#include "verlab/mseries.hpp"

namespace verlab {

// JSON form: exponent tuple -> exact "numerator/denominator" string, with
// deterministic lexicographic key order (nlohmann objects sort keys).
inline nlohmann::json mseries_to_json(const MSeries& s) {
    nlohmann::json vars = nlohmann::json::array();
    const auto& reg = *s.registry();
    for (int i = 0; i < reg.size(); ++i)
        vars.push_back({{"name", reg.name(i)}, {"order", reg.order(i)}});
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [e, c] : s.terms()) {
        std::string key;
        for (int i = 0; i < reg.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(e[i]);
        }
        terms[key] = rat_to_string(c);
    }
    return {{"vars", vars}, {"terms", terms}};
}

inline MSeries mseries_from_json(const nlohmann::json& j) {
    auto reg = std::make_shared<VarRegistry>();
    for (const auto& v : j.at("vars"))
        reg->add(v.at("name").get<std::string>(), v.at("order").get<int>());
    RegistryPtr creg = reg;
    MSeries zero = MSeries::zero(creg);
    MSeries acc = zero;
    for (const auto& [key, val] : j.at("terms").items()) {
        MSeries term = MSeries::constant(creg, rat_from_string(val.get<std::string>()));
        std::size_t pos = 0;
        int vi = 0;
        while (pos <= key.size() && vi < creg->size()) {
            std::size_t comma = key.find(',', pos);
            std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            int k = std::stoi(part);
            if (k > 0) term = term * MSeries::monomial(creg, creg->name(vi), k);
            pos = comma == std::string::npos ? key.size() + 1 : comma + 1;
            ++vi;
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace verlab
