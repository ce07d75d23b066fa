#pragma once

// JSON documents for polynomials, rational functions, walk counts, spectra and
// multiplicity reports. Coefficients are ascending and serialized as decimal
// strings ("-2", "8/3") so big values survive unchanged.

#include "qwalk/power_series.hpp"
#include "qwalk/spectral.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

inline nlohmann::json to_json(const Polynomial& p, const std::string& var = "lambda") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
    return {{"var", var}, {"coeffs", coeffs}};
}

inline nlohmann::json to_json(const RationalFunction& r, const std::string& var = "lambda") {
    return {{"num", to_json(r.numerator(), var)}, {"den", to_json(r.denominator(), var)}};
}

inline nlohmann::json to_json(const PowerSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(c.get_str());
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

inline nlohmann::json to_json(const WalkCounts& w) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : w.counts) counts.push_back(c.get_str());
    return {{"n", w.n}, {"counts", counts}};
}

inline nlohmann::json to_json(const SpectralDecomposition& sd) {
    return {{"eigenvalues", sd.eigenvalues}, {"gammas", sd.gammas}};
}

inline nlohmann::json to_json(const MultiplicityReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : report.entries)
        rows.push_back({{"factor", to_json(e.factor)}, {"s", e.s}, {"t", e.t_values}, {"t_range_ok", e.t_range_ok}});
    return rows;
}

inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

inline RationalFunction rational_function_from_json(const nlohmann::json& j) {
    return {polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den"))};
}

inline WalkCounts walk_counts_from_json(const nlohmann::json& j) {
    WalkCounts w{j.at("n").get<std::size_t>(), {}};
    for (const auto& c : j.at("counts")) w.counts.emplace_back(c.get<std::string>(), 10);
    return w;
}

}  // namespace qwalk
