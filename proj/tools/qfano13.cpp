// qfano13: command-line front end for the index-13 toolkit.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 domain precondition failure.

#include "qfano/fixtures.hpp"
#include "qfano/normal_form.hpp"
#include "qfano/report.hpp"
#include "qfano/riemann_roch.hpp"
#include "qfano/sarkisov.hpp"
#include "qfano/selftest.hpp"
#include "qfano/wps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef QFANO_GOLDEN_DIR
#define QFANO_GOLDEN_DIR "tests/golden"
#endif

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeFlags {
    std::vector<int> weights;
    std::vector<int> space;
    int degree = 0;

    void add_to(CLI::App* app) {
        auto* w = app->add_option("--weights", weights, "five weights w0,..,w4 of a hypersurface")->delimiter(',');
        auto* s = app->add_option("--space", space, "four weights of a weighted projective space")->delimiter(',');
        w->excludes(s);
        app->add_option("--degree", degree, "degree of the hypersurface");
    }

    qfano::HypersurfaceShape shape() const {
        if (weights.empty() && space.empty()) throw UsageError("one of --weights or --space is required");
        const auto& ws = weights.empty() ? space : weights;
        for (int x : ws)
            if (x < 1) throw UsageError("weights must be positive integers");
        if (!weights.empty()) {
            if (weights.size() != 5) throw UsageError("--weights takes exactly five weights");
            if (degree < 1) throw UsageError("--weights needs --degree >= 1");
        } else {
            if (space.size() != 4) throw UsageError("--space takes exactly four weights");
            if (degree != 0) throw UsageError("--degree does not apply to --space");
        }
        try {
            return qfano::HypersurfaceShape(ws, weights.empty() ? 0 : degree);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

int cmd_hilbert(const ShapeFlags& flags, int terms, bool json) {
    const auto shape = flags.shape();
    if (terms < 0) throw UsageError("--terms must be >= 0");
    const auto series = qfano::hilbert(shape, static_cast<std::size_t>(terms)).to_integers();
    if (json) {
        qfano::Json j;
        j["weights"] = std::vector<int>(shape.weights().begin(), shape.weights().end());
        j["degree"] = shape.degree();
        j["terms"] = terms;
        j["hilbert"] = series;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << join(series) << "\n";
    }
    return kOk;
}

int cmd_analyze(const ShapeFlags& flags, const std::string& poly_file, int terms, bool json) {
    const auto shape = flags.shape();
    if (terms < 0) throw UsageError("--terms must be >= 0");
    const auto rep = qfano::analyze(shape, static_cast<std::size_t>(terms));
    auto report = qfano::make_report(rep);
    std::vector<std::string> strata;
    for (const auto& v : rep.quasi_smoothness) strata.push_back(v.stratum + ": " + (v.ok ? "" : "FAIL ") + v.detail);

    if (!poly_file.empty()) {
        if (shape.is_space()) throw UsageError("--poly needs a hypersurface shape");
        const auto poly = qfano::nf::parse(read_file(poly_file), shape.weights());
        if (!qfano::nf::is_quasihomogeneous(poly, shape.degree()))
            report.warnings.push_back("equation is not quasi-homogeneous of degree " + std::to_string(shape.degree()));
        for (const auto& v : qfano::nf::corner_check(poly, shape.degree())) {
            strata.push_back("equation vertex w=" + std::to_string(v.weight) + ": " + (v.ok ? "" : "FAIL ") + v.detail);
            if (!v.ok) report.warnings.push_back("not quasi-smooth at vertex w=" + std::to_string(v.weight));
        }
        const auto& w = shape.weights();
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (std::gcd(w[i], w[j]) == 1) continue;
                const std::string label = "equation edge w=(" + std::to_string(w[i]) + "," + std::to_string(w[j]) + ")";
                try {
                    const auto e = qfano::nf::edge_restriction_points(poly, i, j);
                    std::string line = label + ": " + e.restriction + " -> " + std::to_string(e.points) + " point(s)";
                    if (e.non_reduced) {
                        line += ", non-reduced";
                        report.warnings.push_back("non-reduced restriction on edge w=(" + std::to_string(w[i]) + "," +
                                                  std::to_string(w[j]) + ")");
                    }
                    strata.push_back(line);
                } catch (const qfano::EdgeContained& ex) {
                    strata.push_back(label + ": FAIL " + ex.what());
                    report.warnings.emplace_back(ex.what());
                }
            }
        }
    }

    if (json) {
        std::cout << qfano::to_json(report).dump(2) << "\n";
        return kOk;
    }
    std::cout << "shape: " << shape.str() << "\n";
    std::cout << "fano index: " << report.fano_index << "\n";
    std::cout << "A^3: " << report.a3 << "\n";
    std::cout << "basket: " << rep.basket.str() << "\n";
    for (const auto& e : rep.basket.entries()) std::cout << "  " << e.count << " x " << e.type.str() << "\n";
    std::cout << "genus: " << report.genus << "\n";
    std::cout << "hilbert: " << join(report.hilbert) << "\n";
    std::cout << "strata:\n";
    for (const auto& s : strata) std::cout << "  " << s << "\n";
    std::cout << "warnings:" << (report.warnings.empty() ? " none" : "") << "\n";
    for (const auto& w : report.warnings) std::cout << "  " << w << "\n";
    return kOk;
}

int cmd_link(const std::string& name, bool json, bool bare) {
    const auto id = qfano::sarkisov::parse_case(name);
    if (!id) throw UsageError("unknown case '" + name + "' (expected ng, p2, p3, p5 or p7)");
    const auto t = qfano::sarkisov::run_case(*id, !bare);
    if (json)
        std::cout << qfano::to_json(t).dump(2) << "\n";
    else
        std::cout << qfano::sarkisov::to_text(t);
    return kOk;
}

int cmd_normalize(const std::string& input, bool json) {
    const auto poly = qfano::nf::parse(read_file(input));
    const auto r = qfano::nf::normalize(poly);
    if (json) {
        auto j = qfano::to_json(r);
        j["input"] = qfano::nf::print(poly);
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "input: " << qfano::nf::print(poly) << "\n";
    for (const auto& s : r.log) {
        std::cout << "step: " << s.description << ": " << s.substitution.str() << "\n";
        std::cout << "  = " << s.result << "\n";
    }
    std::cout << "final: " << qfano::nf::print(r.final_poly) << "\n";
    std::cout << "lambda: " << r.lambda << "\n";
    std::cout << "class: " << qfano::nf::form_name(r.form) << "\n";
    return kOk;
}

int cmd_selftest(const std::string& golden_dir, const std::string& fault_name) {
    qfano::Fault fault = qfano::Fault::None;
    if (fault_name == "basket")
        fault = qfano::Fault::Basket;
    else if (fault_name == "golden")
        fault = qfano::Fault::Golden;
    else if (!fault_name.empty())
        throw UsageError("unknown fault '" + fault_name + "'");
    const auto res = qfano::run_selftest(golden_dir, fault);
    for (const auto& c : res.checks) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
        if (!c.ok && !c.detail.empty()) std::cout << "  " << c.detail << "\n";
    }
    std::cout << (res.ok() ? "selftest ok" : "selftest FAILED") << "\n";
    return res.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerics of Q-Fano threefolds of Fano index 13"};
    app.require_subcommand(1);

    ShapeFlags hshape, ashape;
    int hterms = 10, aterms = 20;
    bool hjson = false, ajson = false, ljson = false, lbare = false, njson = false;
    std::string poly_file, link_case, input, golden_dir = QFANO_GOLDEN_DIR, fault;

    auto* hil = app.add_subcommand("hilbert", "coefficients of the Hilbert series");
    hshape.add_to(hil);
    hil->add_option("--terms", hterms, "print coefficients of t^0..t^N");
    hil->add_flag("--json", hjson);

    auto* ana = app.add_subcommand("analyze", "index, degree, basket, genus and quasi-smoothness");
    ashape.add_to(ana);
    ana->add_option("--poly", poly_file, "file with a specific equation");
    ana->add_option("--terms", aterms, "Hilbert series terms in the report");
    ana->add_flag("--json", ajson);

    auto* lnk = app.add_subcommand("link", "Sarkisov link case analysis");
    lnk->add_option("--case", link_case, "ng, p2, p3, p5 or p7")->required();
    lnk->add_flag("--json", ljson);
    lnk->add_flag("--bare", lbare, "skip the filters");

    auto* nrm = app.add_subcommand("normalize", "normal form of a degree-12 equation in P(3,4,5,6,7)");
    nrm->add_option("--input", input, "polynomial file")->required();
    nrm->add_flag("--json", njson);

    auto* st = app.add_subcommand("selftest", "fixture invariants, Riemann-Roch and golden transcripts");
    st->add_option("--golden-dir", golden_dir, "directory with link_<case>.txt");
    st->add_option("--inject-fault", fault, "basket or golden");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*hil) return cmd_hilbert(hshape, hterms, hjson);
        if (*ana) return cmd_analyze(ashape, poly_file, aterms, ajson);
        if (*lnk) return cmd_link(link_case, ljson, lbare);
        if (*nrm) return cmd_normalize(input, njson);
        if (*st) return cmd_selftest(golden_dir, fault);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qfano::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kUsage;
}
