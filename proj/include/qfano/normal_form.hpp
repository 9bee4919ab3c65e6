#pragma once

#include "qfano/errors.hpp"
#include "qfano/polynomial.hpp"
#include "qfano/power_series.hpp"
#include "qfano/rational.hpp"
#include "qfano/wps.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace qfano::nf {

// ---------------------------------------------------------------------------
// Corner check

struct CornerVerdict {
    std::size_t vertex = 0;
    int weight = 0;
    bool ok = false;
    std::vector<Exponent> witnesses;  // support monomials among the requirements
    std::string detail;
};

/// Per-vertex quasi-smoothness witnesses of a specific equation of degree d.
inline std::vector<CornerVerdict> corner_check(const WeightedPolynomial& p, int d) {
    const auto& w = p.weights();
    const HypersurfaceShape shape(std::vector<int>(w.begin(), w.end()), d);
    std::vector<CornerVerdict> out;
    for (const auto& req : corner_requirements(shape)) {
        CornerVerdict v{req.vertex, w[req.vertex], false, {}, {}};
        for (const auto& m : req.monomials)
            if (!p.coefficient(m).is_zero()) v.witnesses.push_back(m);
        v.ok = !v.witnesses.empty();
        if (v.ok) {
            v.detail = "contains " + monomial_name(w, v.witnesses.front());
        } else {
            std::string need;
            for (const auto& m : req.monomials) need += (need.empty() ? "" : ", ") + monomial_name(w, m);
            v.detail = "not quasi-smooth at vertex w=" + std::to_string(v.weight) + " (needs one of " + need + ")";
        }
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normalization of the degree-12 equation

enum class FormClass { FormA, FormB };

inline std::string form_name(FormClass c) { return c == FormClass::FormA ? "A" : "B"; }

struct LoggedStep {
    std::string description;
    Substitution substitution;
    std::string result;  // polynomial after the step
};

struct NormalFormResult {
    FormClass form = FormClass::FormB;
    Rational lambda;             // coefficient of x3^4 in the final polynomial
    Rational multiplier{1};      // the equation was multiplied by this constant
    std::vector<LoggedStep> log;
    WeightedPolynomial final_poly;
};

namespace detail {

inline Exponent x12_mono(std::initializer_list<std::pair<int, int>> powers) {
    const auto& w = x12_weights();
    Exponent e(w.size(), 0);
    for (auto [weight, n] : powers)
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == weight) e[i] += n;
    return e;
}

}  // namespace detail

/*
 * Brings a degree-12 equation in P(3,4,5,6,7) to
 *   x5 x7 + x4^3 + x6^2 + lambda x3^4.
 * Scaling x4 and x6 to unit coefficients needs cube and square roots in
 * general; multiplying the equation by mu = b^2 c^3 first (b, c the
 * coefficients of x4^3, x6^2) makes every scaling factor rational.
 */
inline NormalFormResult normalize(const WeightedPolynomial& input) {
    if (!(input.weights() == x12_weights())) throw GradingError("normalize expects weights (3,4,5,6,7)");
    if (!is_quasihomogeneous(input, 12)) throw GradingError("normalize expects a quasi-homogeneous polynomial of degree 12");
    using detail::x12_mono;
    const Exponent m57 = x12_mono({{5, 1}, {7, 1}}), m444 = x12_mono({{4, 3}}), m66 = x12_mono({{6, 2}});
    const Exponent m345 = x12_mono({{3, 1}, {4, 1}, {5, 1}}), m336 = x12_mono({{3, 2}, {6, 1}}), m3333 = x12_mono({{3, 4}});
    for (const auto& m : {m57, m444, m66})
        if (input.coefficient(m).is_zero()) throw MissingCornerMonomial(monomial_name(x12_weights(), m));

    NormalFormResult res;
    WeightedPolynomial p = input;
    const WeightedPolynomial zero(x12_weights());

    // (1) unit corner coefficients
    const Rational a = p.coefficient(m57), b = p.coefficient(m444), c = p.coefficient(m66);
    const Rational mu = b * b * c * c * c;
    Substitution scale;
    const Rational c4 = (b * c).inverse(), c6 = (b * c * c).inverse(), c7 = (mu * a).inverse();
    if (c4 != Rational(1)) scale.set(4, c4, zero);
    if (c6 != Rational(1)) scale.set(6, c6, zero);
    if (c7 != Rational(1)) scale.set(7, c7, zero);
    if (mu != Rational(1) || !scale.is_identity()) {
        p = substitute(p * mu, scale);
        res.multiplier = mu;
        res.log.push_back({"multiply by " + mu.str() + " and scale", scale, print(p)});
    }

    // (2) remove x3*x4*x5 with a shift of x7
    if (const Rational q = p.coefficient(m345); !q.is_zero()) {
        Substitution shift;
        shift.set(7, Rational(1), WeightedPolynomial::monomial(x12_mono({{3, 1}, {4, 1}}), -q));
        p = substitute(p, shift);
        res.log.push_back({"remove x3*x4*x5", shift, print(p)});
    }

    // (3) complete the square in x6
    if (const Rational s = p.coefficient(m336); !s.is_zero()) {
        Substitution square;
        square.set(6, Rational(1), WeightedPolynomial::monomial(x12_mono({{3, 2}}), -s / Rational(2)));
        p = substitute(p, square);
        res.log.push_back({"complete the square in x6", square, print(p)});
    }

    res.lambda = p.coefficient(m3333);
    res.form = res.lambda.is_zero() ? FormClass::FormB : FormClass::FormA;
    res.final_poly = std::move(p);
    return res;
}

// ---------------------------------------------------------------------------
// Graded ring profile

struct RelationProfile {
    std::int64_t monomials = 0;
    std::int64_t coefficient = 0;
    std::int64_t relations = 0;
    friend bool operator==(const RelationProfile&, const RelationProfile&) = default;
};

/// Degree-d monomials of the ambient ring against the series coefficient at d.
inline RelationProfile relation_profile(const WeightSystem& w, int d, const PowerSeries& series) {
    const auto count = static_cast<std::int64_t>(monomials(w, d).size());
    const auto coeff = series.at(static_cast<std::size_t>(d)).to_int64();
    if (coeff > count)
        throw SeriesExceedsFreeAlgebra("series coefficient " + std::to_string(coeff) + " exceeds " + std::to_string(count) +
                                       " monomials in degree " + std::to_string(d));
    return {count, coeff, count - coeff};
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, ascending coefficients

using UPoly = std::vector<Rational>;

namespace upoly {

inline void trim(UPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

inline UPoly derivative(const UPoly& f) {
    UPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<std::int64_t>(i)));
    trim(d);
    return d;
}

inline UPoly sub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

/// Quotient and remainder; b nonzero.
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("upoly: division by zero polynomial");
    trim(a);
    UPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Rational t = a.back() / b.back();
        q[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= t * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline UPoly monic(UPoly f) {
    trim(f);
    if (f.empty()) return f;
    const Rational lead = f.back();
    for (auto& c : f) c /= lead;
    return f;
}

inline UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Yun's algorithm: multiplicity -> number of distinct roots over the algebraic closure.
inline std::map<int, int> squarefree_profile(UPoly f) {
    trim(f);
    std::map<int, int> out;
    if (degree(f) < 1) return out;
    const UPoly fp = derivative(f);
    const UPoly a0 = gcd(f, fp);
    UPoly b = divmod(f, a0).first;
    UPoly c = divmod(fp, a0).first;
    UPoly d = sub(c, derivative(b));
    for (int i = 1; degree(b) >= 1; ++i) {
        const UPoly a = gcd(b, d);
        if (degree(a) >= 1) out[i] = degree(a);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = sub(c, derivative(b));
    }
    return out;
}

}  // namespace upoly

// ---------------------------------------------------------------------------
// Edge restriction

struct EdgePoints {
    int points = 0;
    std::map<int, int> multiplicities;  // multiplicity -> number of points
    bool non_reduced = false;
    std::string restriction;
};

/*
 * Zeros of p on the edge P(w_i, w_j), all other coordinates set to zero.
 * Away from the two vertices the edge is C* with coordinate
 * u = x_i^{w_j/g} / x_j^{w_i/g}, so the restriction becomes a univariate
 * polynomial in u; the vertices are zeros when every term carries x_j
 * (resp. x_i).
 */
inline EdgePoints edge_restriction_points(const WeightedPolynomial& p, std::size_t i, std::size_t j) {
    const auto& w = p.weights();
    if (i >= w.size() || j >= w.size() || i == j) throw std::invalid_argument("edge_restriction_points: bad vertex pair");
    WeightedPolynomial r(w);
    for (const auto& [e, c] : p.terms()) {
        bool on_edge = true;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (k != i && k != j && e[k] > 0) on_edge = false;
        if (on_edge) r.add_term(e, c);
    }
    if (r.is_zero())
        throw EdgeContained("edge x" + std::to_string(w[i]) + ",x" + std::to_string(w[j]) + " lies in the hypersurface");
    if (!is_quasihomogeneous(r, weighted_degree(w, r.terms().begin()->first)))
        throw GradingError("edge_restriction_points: restriction is not quasi-homogeneous");

    EdgePoints out;
    out.restriction = print(r);
    const int g = std::gcd(w[i], w[j]);
    const int step = w[j] / g;  // exponent of x_i changes in multiples of this
    int pmin = std::numeric_limits<int>::max(), qmin = std::numeric_limits<int>::max();
    for (const auto& [e, c] : r.terms()) {
        pmin = std::min(pmin, e[i]);
        qmin = std::min(qmin, e[j]);
    }
    UPoly f;
    for (const auto& [e, c] : r.terms()) {
        const auto t = static_cast<std::size_t>((e[i] - pmin) / step);
        if (f.size() <= t) f.resize(t + 1);
        f[t] += c;
    }
    for (const auto& [mult, count] : upoly::squarefree_profile(f)) {
        out.multiplicities[mult] += count;
        out.points += count;
    }
    for (int m : {pmin, qmin}) {
        if (m > 0) {
            out.multiplicities[m] += 1;
            out.points += 1;
        }
    }
    out.non_reduced = !out.multiplicities.empty() && out.multiplicities.rbegin()->first > 1;
    return out;
}

}  // namespace qfano::nf
