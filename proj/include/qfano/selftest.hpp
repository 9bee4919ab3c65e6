#pragma once

#include "qfano/fixtures.hpp"
#include "qfano/normal_form.hpp"
#include "qfano/riemann_roch.hpp"
#include "qfano/sarkisov.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qfano {

enum class Fault { None, Basket, Golden };

struct SelfCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct SelfTestResult {
    std::vector<SelfCheck> checks;
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const SelfCheck& c) { return c.ok; });
    }
};

inline std::string golden_file_name(sarkisov::CaseId id) {
    std::string n = sarkisov::case_name(id);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return "link_" + n + ".txt";
}

/// First differing line, "" when equal.
inline std::string first_difference(const std::string& expected, const std::string& actual) {
    std::istringstream a(expected), b(actual);
    std::string la, lb;
    for (int line = 1;; ++line) {
        const bool ha = static_cast<bool>(std::getline(a, la));
        const bool hb = static_cast<bool>(std::getline(b, lb));
        if (!ha && !hb) return "";
        if (!ha || !hb || la != lb) {
            return "line " + std::to_string(line) + ":\n- " + (ha ? la : "<end of file>") + "\n+ " + (hb ? lb : "<end of output>");
        }
    }
}

inline SelfTestResult run_selftest(const std::filesystem::path& golden_dir, Fault fault = Fault::None) {
    SelfTestResult res;
    for (Fixture f : fixtures()) {
        if (fault == Fault::Basket && f.name == "X12") f.basket.pop_back();
        const auto bad = check_fixture(f);
        std::string detail;
        for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
        res.checks.push_back({"invariants " + f.name, bad.empty(), detail});
    }
    for (const auto& f : fixtures()) {
        SelfCheck c{"riemann-roch " + f.name, true, ""};
        try {
            const auto cal = calibrate_shape(f.shape, 24);
            const auto rr = hilbert_rr(cal.data, 30);
            const auto cmp = series_equal_upto(rr, hilbert(f.shape, 30), 24);
            if (!cmp.equal) {
                c.ok = false;
                c.detail = "series differ at t^" + std::to_string(*cmp.first_mismatch);
            }
        } catch (const Error& e) {
            c.ok = false;
            c.detail = e.what();
        }
        res.checks.push_back(c);
    }
    for (const auto& eq : equation_fixtures()) {
        const auto r = nf::normalize(nf::parse(eq.text));
        const bool fixed = r.log.empty() && r.form == eq.form;
        res.checks.push_back({"normal form " + eq.name, fixed, fixed ? "" : "class " + nf::form_name(r.form)});
    }
    for (auto id : {sarkisov::CaseId::NG, sarkisov::CaseId::P2, sarkisov::CaseId::P3, sarkisov::CaseId::P5, sarkisov::CaseId::P7}) {
        const auto path = golden_dir / golden_file_name(id);
        SelfCheck c{"transcript " + sarkisov::case_name(id), true, ""};
        std::ifstream in(path);
        if (!in) {
            c.ok = false;
            c.detail = "cannot read " + path.string();
        } else {
            std::stringstream buf;
            buf << in.rdbuf();
            std::string actual = sarkisov::to_text(sarkisov::run_case(id));
            if (fault == Fault::Golden && id == sarkisov::CaseId::P5) actual += "drift\n";
            const auto diff = first_difference(buf.str(), actual);
            c.ok = diff.empty();
            c.detail = diff;
        }
        res.checks.push_back(c);
    }
    return res;
}

}  // namespace qfano
