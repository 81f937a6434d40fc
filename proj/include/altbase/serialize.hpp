#pragma once

#include <nlohmann/json.hpp>

#include "altbase/admissibility.hpp"
#include "altbase/certify.hpp"
#include "altbase/expansion.hpp"
#include "altbase/ppfamily.hpp"

namespace altbase {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const FieldElement& a) {
    json coords = json::array();
    for (const auto& c : a.coords()) coords.push_back(c.str());
    return json{{"coords", coords}, {"approx", a.approx()}};
}

inline json to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(static_cast<size_t>(i)).str());
    return coeffs;
}

inline json to_json(const ExpansionReport& rep) {
    json j{{"kind", to_string(rep.kind)},
           {"word", rep.word.str()},
           {"steps_used", rep.steps_used}};
    if (rep.remainder_at_cutoff) j["remainder_at_cutoff"] = to_json(*rep.remainder_at_cutoff);
    return j;
}

inline json to_json(const PointedExpansion& pe) {
    std::string integer;
    for (size_t i = 0; i < pe.word.integer_part.size(); ++i) {
        if (i) integer += ",";
        integer += std::to_string(pe.word.integer_part[i]);
    }
    return json{{"kind", to_string(pe.kind)},
                {"integer_part", integer},
                {"fractional", pe.word.fractional.str()},
                {"scale_k", pe.scale_k},
                {"steps_used", pe.steps_used}};
}

inline json to_json(const AdmissibilityResult& r) {
    json j{{"verdict", to_string(r.verdict)}};
    j["position"] = r.position ? json(*r.position) : json(nullptr);
    return j;
}

inline json to_json(const AlgebraicClassification& c) {
    json conj = json::array();
    for (const auto& ci : c.conjugates)
        conj.push_back(json{{"re", ci.root.real()},
                            {"im", ci.root.imag()},
                            {"modulus", ci.modulus},
                            {"in_band", ci.in_band},
                            {"is_identity", ci.is_identity}});
    return json{{"is_algebraic_integer", c.is_algebraic_integer},
                {"is_unit", c.is_unit},
                {"kind", to_string(c.kind)},
                {"self_reciprocal", c.self_reciprocal},
                {"degree", c.degree},
                {"conjugates", conj}};
}

inline json to_json(const EmbeddingPositivity& e) {
    json images = json::array();
    for (size_t i = 0; i < e.images.size(); ++i)
        images.push_back(json{{"re", e.images[i].real()},
                              {"im", e.images[i].imag()},
                              {"near_zero", e.band_flags[i]}});
    return json{{"conjugate", json{{"re", e.embedding.conjugate.real()},
                                   {"im", e.embedding.conjugate.imag()}}},
                {"is_identity", e.embedding.is_identity},
                {"is_real", e.embedding.is_real()},
                {"verdict", to_string(e.verdict)},
                {"images", images}};
}

inline json to_json(const PeriodicityCertificate& cert) {
    json inputs = json::array();
    for (const auto& in : cert.inputs)
        inputs.push_back(json{{"x", in.x.str()}, {"expansion", to_json(in.report)}});
    json matrix = json::array();
    for (const auto& row : cert.matrix) {
        json jrow = json::array();
        for (const auto& entry : row) jrow.push_back(to_json(entry));
        matrix.push_back(jrow);
    }
    return json{{"inputs", inputs},
                {"r", cert.r},
                {"s", cert.s},
                {"matrix", matrix},
                {"detpoly", to_json(cert.detpoly)},
                {"checks",
                 json{{"matrix_kills_v", cert.matrix_kills_v},
                      {"det_vanishes_at_delta", cert.det_vanishes_at_delta},
                      {"det_nonzero_poly", cert.det_nonzero_poly},
                      {"rank_p_minus_1", cert.rank_p_minus_1}}},
                {"numeric_rank", cert.numeric_rank},
                {"leading_minor_nonzero", cert.leading_minor_nonzero}};
}

inline json to_json(const FinitenessSampleReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.violations)
        violations.push_back(json{{"x", to_json(v.x)},
                                  {"y", to_json(v.y)},
                                  {"word_x", v.word_x.str()},
                                  {"word_y", v.word_y.str()},
                                  {"operation", v.subtraction ? "subtraction" : "addition"},
                                  {"result", to_json(v.result_report)}});
    return json{{"samples_requested", rep.samples_requested},
                {"pairs_tested", rep.pairs_tested},
                {"pool_size", rep.pool_size},
                {"undecided", rep.undecided},
                {"violations", violations},
                {"verdict", rep.violations.empty()
                                ? "no violation found"
                                : "counterexample found"}};
}

inline json to_json(const GammaScanReport& rep) {
    json j{{"qmax", rep.qmax},
           {"cap", rep.cap},
           {"scanned", rep.scanned},
           {"verified_lower", rep.verified_lower.str()},
           {"verified_lower_approx", rep.verified_lower.to_double()}};
    if (rep.first_failure) {
        j["first_failure"] = json{{"x", rep.first_failure->first.str()},
                                  {"x_approx", rep.first_failure->first.to_double()},
                                  {"expansion", to_json(rep.first_failure->second)}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["undecided_at"] = rep.undecided_at ? json(rep.undecided_at->str()) : json(nullptr);
    return j;
}

inline json to_json(const PPRewriteResult& r) {
    json j{{"word", r.report.word.str()},
           {"kind", to_string(r.report.kind)},
           {"delta_word", r.delta_word.str()},
           {"rewrite_steps", r.rewrite_steps}};
    if (!r.trace.empty()) {
        json steps = json::array();
        for (const auto& st : r.trace)
            steps.push_back(json{{"rule", st.rule},
                                 {"position", st.position},
                                 {"blocks", blocks_str(st.blocks)}});
        j["trace"] = steps;
    }
    return j;
}

inline json to_json(const DeltaWord& dw) {
    auto digits = [](const std::vector<DeltaDigit>& v) {
        json out = json::array();
        for (const auto& d : v) {
            json block = json::array();
            for (Digit digit : d.block) block.push_back(digit);
            json coords = json::array();
            for (const auto& c : d.value.coords()) coords.push_back(c.str());
            out.push_back(json{{"block", block}, {"coords", coords}});
        }
        return out;
    };
    return json{{"preperiod", digits(dw.preperiod)}, {"period", digits(dw.period)}};
}

}  // namespace altbase
