// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include "qfano/fixtures.hpp"
#include "qfano/normal_form.hpp"
#include "qfano/riemann_roch.hpp"
#include "qfano/sarkisov.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace qfano;
using namespace qfano::nf;
using namespace qfano::sarkisov;

namespace {

struct Check {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

std::vector<std::int64_t> ints(const PowerSeries& s) { return s.to_integers(); }

Check hilbert_series() {
    Check c;
    const auto s = expand_product({{12}, {3, 4, 5, 6, 7}}, 13);
    c.require(s.truncated(10).to_integers() == std::vector<std::int64_t>{1, 0, 0, 1, 1, 1, 2, 2, 2, 3, 4}, "coefficients t^0..t^10");
    c.require(s[13] == Rational(6), "coefficient at t^13");
    c.require(genus_from_series(s, 13) == 4, "genus");
    return c;
}

Check analyze_x12() {
    Check c;
    const auto r = analyze(fixture("X12").shape);
    c.require(r.fano_index == 13, "fano index");
    c.require(r.a3 == Rational(1, 210), "A^3");
    c.require(r.basket.indices() == std::vector<int>{2, 3, 3, 5, 7}, "basket");
    c.require(r.genus == 4, "genus");
    return c;
}

Check rr_oracle() {
    Check c;
    for (const auto& f : fixtures()) {
        const auto cal = calibrate_shape(f.shape, 24);
        c.require(series_equal_upto(hilbert_rr(cal.data, 24), hilbert(f.shape, 24), 24).equal, "RR series of " + f.name);
        for (int m = 0; m <= 30; ++m) {
            try {
                chi(cal.data, m);
            } catch (const Error&) {
                c.require(false, "chi integrality of " + f.name);
            }
        }
    }
    return c;
}

std::set<std::string> triples(const std::vector<LinkCandidate>& cs) {
    std::set<std::string> out;
    for (const auto& x : cs) out.insert(x.alpha.str() + "," + std::to_string(x.qhat) + "," + std::to_string(x.e));
    return out;
}

Check link_transcripts() {
    Check c;
    const auto ng = run_case(CaseId::NG);
    for (const auto& x : ng.bare) c.require(x.qhat == 11 && x.alpha * Rational(x.e) == Rational(2), "NG bare (qhat, alpha e)");
    c.require(!ng.bare.empty() && ng.final_set().empty(), "NG final");

    const auto p3 = run_case(CaseId::P3);
    const auto t3 = triples(p3.bare);
    for (const auto* want : {"2/3,8,1", "1/3,4,1", "1/3,8,2"}) c.require(t3.count(want) == 1, std::string("P3 bare ") + want);
    c.require(p3.final_set().empty(), "P3 final");

    const auto p7 = run_case(CaseId::P7);
    std::set<std::pair<int, int>> q7;
    for (const auto& x : p7.bare) q7.insert({x.qhat, x.e});
    c.require(q7 == std::set<std::pair<int, int>>{{9, 2}, {11, 1}}, "P7 bare");
    c.require(p7.final_set().empty(), "P7 final");

    const auto p2 = run_case(CaseId::P2);
    const auto f2 = p2.final_set();
    c.require(f2.size() == 1, "P2 final size");
    if (f2.size() == 1) {
        const auto& x = *f2.front();
        c.require(x.qhat == 11 && x.e == 4 && x.s == 2 && x.beta == Rational(1), "P2 survivor");
        c.require(x.target && x.target->str() == "P(1,2,3,5)", "P2 target");
        c.require(canonical_threshold(p2.center, x) == Rational(1, 2), "P2 ct");
    }

    const auto p5 = run_case(CaseId::P5);
    const auto f5 = p5.final_set();
    c.require(f5.size() == 1, "P5 final size");
    if (f5.size() == 1) {
        const auto& x = *f5.front();
        c.require(x.qhat == 7 && x.e == 4, "P5 survivor");
        c.require(x.target && x.target->str() == "P(1,1,2,3)", "P5 target");
        c.require(x.unique_s(3) == 1 && x.unique_s(7) == 1 && x.unique_s(6) == 2 && x.unique_s(5) == 3, "P5 s_k");
        c.require(canonical_threshold(p5.center, x) == Rational(1, 2), "P5 ct");
    }
    bool extra = false;
    for (const auto& x : p5.filtered)
        if (x.qhat == 19 && x.e == 9) extra = x.verdict == Verdict::Eliminated && x.filter == FilterId::Effectivity;
    c.require(extra, "P5 (19,9) eliminated by F3");
    return c;
}

Check second_contraction_data() {
    Check c;
    const auto rep = second_contraction({4, 7, {{3, 1}, {5, 3}, {6, 2}, {7, 1}}, 13, true});
    c.require(rep.min_delta == 7, "minimal delta");
    if (!rep.solutions.empty()) {
        const auto& s = rep.solutions.front();
        c.require(s.b == Rational(9), "b");
        c.require(s.gammas == std::map<int, int>{{3, 1}, {5, 4}, {6, 2}, {7, 0}}, "gammas");
    }
    const auto p5 = run_case(CaseId::P5);
    for (const auto& x : p5.filtered) {
        if (x.qhat != 17 || x.e != 6) continue;
        const auto r = second_contraction(second_contraction_input(x));
        c.require(r.modulus == 6 && r.residues == std::vector<int>{5}, "delta == 5 mod 6");
    }
    return c;
}

Check graded_ring() {
    Check c;
    const auto series = hilbert(fixture("X12").shape, 30);
    const auto& w = x12_weights();
    c.require(relation_profile(w, 12, series) == RelationProfile{6, 5, 1}, "degree 12 profile");
    for (int d = 3; d <= 11; ++d) c.require(relation_profile(w, d, series).relations == 0, "no relation in degree " + std::to_string(d));
    const auto g = infer_generators(series);
    c.require(g.generator_degrees == std::vector<int>{3, 4, 5, 6, 7}, "generators");
    c.require(g.first_relation == 12, "first relation");
    return c;
}

Rational draw(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

Check normalization() {
    Check c;
    const auto& w = x12_weights();
    const std::set<Exponent> allowed{parse("x5*x7").support().front(), parse("x4^3").support().front(),
                                     parse("x6^2").support().front(), parse("x3^4").support().front()};
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        WeightedPolynomial p = parse("x5*x7 + x4^3 + x6^2");
        for (const auto& e : monomials(w, 12))
            if (!allowed.count(e) || e == parse("x3^4").support().front()) p.add_term(e, draw(rng, false));
        if (t % 2) {  // push half of the sample into class B
            const Rational s = p.coefficient(parse("x3^2*x6").support().front());
            p.add_term(parse("x3^4").support().front(), s * s / Rational(4) - p.coefficient(parse("x3^4").support().front()));
        }
        const auto r = normalize(p);
        for (const auto& e : r.final_poly.support()) c.require(allowed.count(e) == 1, "final support of " + print(p));

        Substitution phi;
        for (int k : w) {
            WeightedPolynomial g(w);
            for (const auto& e : monomials(w, k))
                if (e[g.index_of(k)] == 0) g.add_term(e, draw(rng, false));
            phi.set(k, draw(rng, true), g);
        }
        c.require(normalize(substitute(p, phi)).form == r.form, "class invariance for " + print(p));
    }
    for (const auto& f : equation_fixtures()) {
        const auto r = normalize(parse(f.text));
        c.require(r.form == f.form && r.log.empty() && r.final_poly == parse(f.text), "fixed point " + f.name);
    }
    return c;
}

Check oracles() {
    Check c;
    for (const auto& f : fixtures()) {
        std::vector<int> ws(f.shape.weights().begin(), f.shape.weights().end());
        const auto s = expand_product({{}, ws}, 30);
        for (int m = 0; m <= 30; ++m)
            c.require(s[static_cast<std::size_t>(m)] == Rational(static_cast<std::int64_t>(partition_count(ws, m))),
                      "partition count for " + f.name);
    }
    const auto a = parse("x5*x7 + x6^2 + x4^3 + x3^4");
    const auto& shape = fixture("X12").shape;
    const auto e36 = edge_restriction_points(a, a.index_of(3), a.index_of(6));
    const auto e46 = edge_restriction_points(a, a.index_of(4), a.index_of(6));
    c.require(e36.points == 2 && e46.points == 1, "form (a) edge points");
    const auto g36 = edge_singularities(shape, a.index_of(3), a.index_of(6));
    const auto g46 = edge_singularities(shape, a.index_of(4), a.index_of(6));
    c.require(g36 && g46 && g36->count == e36.points && g46->count == e46.points, "general member formula");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"hilbert series of X12", hilbert_series},
        {"analyze X12", analyze_x12},
        {"Riemann-Roch oracle equivalence", rr_oracle},
        {"link transcripts", link_transcripts},
        {"second contraction", second_contraction_data},
        {"graded ring profile", graded_ring},
        {"normalization", normalization},
        {"oracle properties", oracles},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why = std::string("exception: ") + e.what();
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
        if (!c.ok) std::cout << ": " << c.why;
        std::cout << "\n";
        failures += c.ok ? 0 : 1;
    }
    return failures;
}
