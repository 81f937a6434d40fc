#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "altbase/base.hpp"

namespace altbase {

/// Builds a base from its JSON description. Two forms are accepted:
///
///   {"pp_family": m}
///
///   {"minpoly": [c0, c1, ..., cn],              // integers, ascending degree
///    "root_interval": ["lo", "hi"],             // rationals as "p/q" strings
///    "betas": [["c0", "c1", ...], ...]}         // coordinates per beta
///
/// Rationals are written as "p/q" strings ("p" alone is an integer); integer
/// JSON numbers are accepted wherever a rational is expected.
inline AlternateBase base_from_json(const nlohmann::json& j) {
    auto as_rational = [](const nlohmann::json& v) -> Rational {
        if (v.is_number_integer()) return Rational((long long)v.get<long long>());
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        throw ParseError("expected a rational (integer or \"p/q\" string)");
    };
    if (!j.is_object()) throw ParseError("base config must be a JSON object");

    if (j.contains("pp_family")) {
        if (!j["pp_family"].is_number_integer())
            throw ParseError("pp_family must be an integer");
        return pp_family(j["pp_family"].get<long>());
    }

    for (const char* key : {"minpoly", "root_interval", "betas"})
        if (!j.contains(key))
            throw ParseError(std::string("base config is missing '") + key + "'");

    std::vector<Rational> coeffs;
    for (const auto& c : j.at("minpoly")) coeffs.push_back(as_rational(c));
    Polynomial minpoly(std::move(coeffs));

    const auto& ri = j.at("root_interval");
    if (!ri.is_array() || ri.size() != 2)
        throw ParseError("root_interval must be [lo, hi]");
    Interval isolator(as_rational(ri[0]), as_rational(ri[1]));

    auto field = NumberField::make(minpoly, isolator);

    std::vector<FieldElement> betas;
    for (const auto& b : j.at("betas")) {
        if (!b.is_array()) throw ParseError("each beta must be a coordinate array");
        std::vector<Rational> coords;
        for (const auto& c : b) coords.push_back(as_rational(c));
        if (static_cast<int>(coords.size()) != field->degree())
            throw MalformedConfigError("beta coordinate count must equal the field degree");
        betas.emplace_back(field, std::move(coords));
    }
    return AlternateBase::make(field, std::move(betas));
}

inline AlternateBase base_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open base config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return base_from_json(j);
}

/// Parses a CLI base reference: "pp:M", "pp:M,shiftK", or "file:PATH".
inline AlternateBase base_from_ref(const std::string& ref) {
    if (ref.rfind("pp:", 0) == 0) {
        std::string rest = ref.substr(3);
        long shift_index = 1;
        size_t comma = rest.find(',');
        if (comma != std::string::npos) {
            std::string shift_part = rest.substr(comma + 1);
            if (shift_part.rfind("shift", 0) != 0)
                throw ParseError("expected 'shiftK' after comma in base ref: " + ref);
            try {
                shift_index = std::stol(shift_part.substr(5));
            } catch (...) {
                throw ParseError("invalid shift in base ref: " + ref);
            }
            rest = rest.substr(0, comma);
        }
        long m;
        try {
            m = std::stol(rest);
        } catch (...) {
            throw ParseError("invalid family parameter in base ref: " + ref);
        }
        AlternateBase b = pp_family(m);
        return shift_index == 1 ? b : b.shift(shift_index);
    }
    if (ref.rfind("file:", 0) == 0) return base_from_file(ref.substr(5));
    throw ParseError("unrecognized base reference (want pp:M, pp:M,shiftK or file:PATH): " +
                     ref);
}

}  // namespace altbase
