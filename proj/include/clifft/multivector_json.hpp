#ifndef CLIFFT_MULTIVECTOR_JSON_HPP
#define CLIFFT_MULTIVECTOR_JSON_HPP

#include <json.hpp>

#include "clifft/multivector.hpp"

namespace clifft {

// Wire format: {"dim": m, "coeffs": {"<bitmask-decimal>": [re, im], ...}},
// zero coefficients omitted.
inline nlohmann::json to_json(const Multivector& a)
{
    nlohmann::json coeffs = nlohmann::json::object();
    for (unsigned m = 0; m < a.size(); ++m) {
        const Complex c = a[m];
        if (c == 0.0) continue;
        coeffs[std::to_string(m)] = {c.real(), c.imag()};
    }
    return nlohmann::json{{"dim", a.dim()}, {"coeffs", coeffs}};
}

inline Multivector multivector_from_json(const nlohmann::json& j)
{
    Multivector r(j.at("dim").get<int>());
    for (const auto& [key, val] : j.at("coeffs").items()) {
        const unsigned mask = static_cast<unsigned>(std::stoul(key));
        if (mask >= r.size()) throw std::invalid_argument("coefficient mask out of range");
        r[mask] = Complex(val.at(0).get<double>(), val.at(1).get<double>());
    }
    return r;
}

} // namespace clifft

#endif
