#pragma once

#include "qfano/normal_form.hpp"
#include "qfano/rational.hpp"
#include "qfano/sarkisov.hpp"
#include "qfano/wps.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qfano {

using Json = nlohmann::ordered_json;

struct BasketRow {
    int r = 0;
    int b = 0;
    int count = 0;
    friend bool operator==(const BasketRow&, const BasketRow&) = default;
};

/// Flat, exact form of an analysis; rationals travel as "p/q" strings.
struct ReportJSON {
    std::vector<int> weights;
    int degree = 0;
    int fano_index = 0;
    Rational a3;
    std::vector<BasketRow> basket;
    std::int64_t genus = 0;
    std::vector<std::int64_t> hilbert;
    std::vector<std::string> warnings;
    friend bool operator==(const ReportJSON&, const ReportJSON&) = default;
};

inline ReportJSON make_report(const AnalysisReport& a) {
    ReportJSON r;
    r.weights.assign(a.shape.weights().begin(), a.shape.weights().end());
    r.degree = a.shape.degree();
    r.fano_index = a.fano_index;
    r.a3 = a.a3;
    for (const auto& e : a.basket.entries()) r.basket.push_back({e.type.r, e.type.b, e.count});
    r.genus = a.genus;
    r.hilbert = a.hilbert.to_integers();
    r.warnings = a.warnings;
    return r;
}

inline Json to_json(const ReportJSON& r) {
    Json j;
    j["weights"] = r.weights;
    j["degree"] = r.degree;
    j["fano_index"] = r.fano_index;
    j["a3"] = r.a3.str();
    j["basket"] = Json::array();
    for (const auto& b : r.basket) j["basket"].push_back({{"r", b.r}, {"b", b.b}, {"count", b.count}});
    j["genus"] = r.genus;
    j["hilbert"] = r.hilbert;
    j["warnings"] = r.warnings;
    return j;
}

inline ReportJSON report_from_json(const Json& j) {
    ReportJSON r;
    r.weights = j.at("weights").get<std::vector<int>>();
    r.degree = j.at("degree").get<int>();
    r.fano_index = j.at("fano_index").get<int>();
    r.a3 = Rational::parse(j.at("a3").get<std::string>());
    for (const auto& b : j.at("basket")) r.basket.push_back({b.at("r").get<int>(), b.at("b").get<int>(), b.at("count").get<int>()});
    r.genus = j.at("genus").get<std::int64_t>();
    r.hilbert = j.at("hilbert").get<std::vector<std::int64_t>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

// ---------------------------------------------------------------------------
// Transcripts

inline Json to_json(const sarkisov::LinkCandidate& c) {
    Json j;
    j["alpha"] = c.alpha.str();
    j["qhat"] = c.qhat;
    j["e"] = c.e;
    j["k"] = c.k;
    j["s"] = c.s;
    j["beta"] = c.beta.str();
    j["birational"] = c.birational;
    return j;
}

inline Json to_json(const sarkisov::Transcript& t) {
    using namespace sarkisov;
    Json j;
    j["case"] = case_name(t.center.id);
    j["k"] = t.center.k;
    j["alphas"] = Json::array();
    for (const auto& a : t.center.alphas) j["alphas"].push_back(a.str());
    j["bare"] = Json::array();
    for (const auto& c : t.bare) j["bare"].push_back(to_json(c));
    if (!t.filters_applied) return j;
    j["filters"] = Json::array();
    for (const auto& c : t.filtered) {
        Json f = to_json(c);
        Json splits = Json::object();
        for (const auto& [k, sp] : c.splits) {
            Json arr = Json::array();
            for (const auto& x : sp) arr.push_back({{"s", x.s}, {"beta", x.beta.str()}});
            splits[std::to_string(k)] = arr;
        }
        f["splits"] = splits;
        f["target"] = c.target ? Json(c.target->str()) : Json(nullptr);
        f["verdict"] = c.verdict == Verdict::Eliminated ? "eliminated" : "passed";
        f["filter"] = filter_code(c.filter);
        f["reason"] = c.reason;
        f["notes"] = c.notes;
        j["filters"].push_back(f);
    }
    j["final"] = Json::array();
    for (const auto* c : t.final_set()) {
        Json f = to_json(*c);
        f["target"] = c->target ? Json(c->target->str()) : Json(nullptr);
        f["d"] = c->d_values();
        f["canonical_threshold"] = canonical_threshold(t.center, *c).str();
        const auto sc = second_contraction(second_contraction_input(*c));
        if (sc.min_delta) {
            const auto& sol = sc.solutions.front();
            Json g = Json::object();
            for (const auto& [k, v] : sol.gammas) g[std::to_string(k)] = v;
            f["second_contraction"] = {{"delta", sol.delta}, {"b", sol.b.str()}, {"gamma", g}};
        }
        j["final"].push_back(f);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Normal forms

inline Json to_json(const nf::NormalFormResult& r) {
    Json j;
    j["class"] = nf::form_name(r.form);
    j["lambda"] = r.lambda.str();
    j["multiplier"] = r.multiplier.str();
    j["steps"] = Json::array();
    for (const auto& s : r.log)
        j["steps"].push_back({{"description", s.description}, {"substitution", s.substitution.str()}, {"result", s.result}});
    j["final"] = nf::print(r.final_poly);
    return j;
}

}  // namespace qfano
