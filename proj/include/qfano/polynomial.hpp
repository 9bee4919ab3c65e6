#pragma once

#include "qfano/errors.hpp"
#include "qfano/rational.hpp"
#include "qfano/wps.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qfano::nf {

/// The ambient weights of the degree-12 threefold.
inline const WeightSystem& x12_weights() {
    static const WeightSystem w{3, 4, 5, 6, 7};
    return w;
}

/*
 * Graded lexicographic order: weighted degree first, then the exponent of
 * the heaviest variable, and so on down.  Variables are ordered by position,
 * which for ascending weights is x3 < x4 < ... < x7.
 */
struct GradedLex {
    const WeightSystem* w = nullptr;
    bool operator()(const Exponent& a, const Exponent& b) const {
        const int da = weighted_degree(*w, a), db = weighted_degree(*w, b);
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Polynomial over Q in variables named by their (distinct) weights.
class WeightedPolynomial {
public:
    using Terms = std::map<Exponent, Rational, GradedLex>;

    explicit WeightedPolynomial(WeightSystem w = x12_weights())
        : w_(std::make_shared<WeightSystem>(std::move(w))), terms_(GradedLex{w_.get()}) {
        auto ws = std::vector<int>(w_->begin(), w_->end());
        std::sort(ws.begin(), ws.end());
        if (std::adjacent_find(ws.begin(), ws.end()) != ws.end())
            throw std::invalid_argument("WeightedPolynomial: variable weights must be distinct");
    }

    WeightedPolynomial(const WeightedPolynomial& o) : w_(o.w_), terms_(o.terms_.begin(), o.terms_.end(), GradedLex{w_.get()}) {}
    WeightedPolynomial& operator=(const WeightedPolynomial& o) {
        if (this != &o) {
            w_ = o.w_;
            terms_ = Terms(o.terms_.begin(), o.terms_.end(), GradedLex{w_.get()});
        }
        return *this;
    }
    WeightedPolynomial(WeightedPolynomial&&) = default;
    WeightedPolynomial& operator=(WeightedPolynomial&&) = default;

    static WeightedPolynomial constant(const Rational& c, const WeightSystem& w = x12_weights()) {
        WeightedPolynomial p(w);
        p.add_term(Exponent(w.size(), 0), c);
        return p;
    }
    /// The coordinate of weight `weight`.
    static WeightedPolynomial variable(int weight, const WeightSystem& w = x12_weights()) {
        WeightedPolynomial p(w);
        Exponent e(w.size(), 0);
        e[p.index_of(weight)] = 1;
        p.add_term(e, Rational(1));
        return p;
    }
    static WeightedPolynomial monomial(const Exponent& e, const Rational& c = Rational(1), const WeightSystem& w = x12_weights()) {
        WeightedPolynomial p(w);
        p.add_term(e, c);
        return p;
    }

    const WeightSystem& weights() const { return *w_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::size_t index_of(int weight) const {
        for (std::size_t i = 0; i < w_->size(); ++i)
            if ((*w_)[i] == weight) return i;
        throw UnknownVariable("no variable x" + std::to_string(weight) + " in " + w_->str());
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponent& e, const Rational& c) {
        if (e.size() != w_->size()) throw std::invalid_argument("WeightedPolynomial: exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Support exponents in ascending graded-lex order.
    std::vector<Exponent> support() const {
        std::vector<Exponent> out;
        for (const auto& [e, c] : terms_) out.push_back(e);
        return out;
    }

    /// True when the polynomial involves the given variable index.
    bool involves(std::size_t i) const {
        return std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] > 0; });
    }

    WeightedPolynomial& operator+=(const WeightedPolynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    WeightedPolynomial& operator-=(const WeightedPolynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    WeightedPolynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend WeightedPolynomial operator+(WeightedPolynomial a, const WeightedPolynomial& b) { return a += b; }
    friend WeightedPolynomial operator-(WeightedPolynomial a, const WeightedPolynomial& b) { return a -= b; }
    friend WeightedPolynomial operator*(WeightedPolynomial a, const Rational& s) { return a *= s; }
    friend WeightedPolynomial operator*(const Rational& s, WeightedPolynomial a) { return a *= s; }
    friend WeightedPolynomial operator-(WeightedPolynomial a) { return a *= Rational(-1); }

    friend WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b) {
        a.check_ring(b);
        WeightedPolynomial out(a.weights());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const WeightedPolynomial& a, const WeightedPolynomial& b) {
        return a.weights() == b.weights() && std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
    }

private:
    void check_ring(const WeightedPolynomial& o) const {
        if (!(weights() == o.weights())) throw std::invalid_argument("WeightedPolynomial: different weight systems");
    }

    // Shared so the comparator's pointer stays valid across moves.
    std::shared_ptr<WeightSystem> w_;
    Terms terms_;
};

inline WeightedPolynomial pow(const WeightedPolynomial& p, unsigned n) {
    auto r = WeightedPolynomial::constant(Rational(1), p.weights());
    for (unsigned i = 0; i < n; ++i) r = r * p;
    return r;
}

inline bool is_quasihomogeneous(const WeightedPolynomial& p, int d) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const auto& t) { return weighted_degree(p.weights(), t.first) == d; });
}

// ---------------------------------------------------------------------------
// Text form

/// Terms from the heaviest down; "0" for the zero polynomial.
inline std::string print(const WeightedPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (is_const) {
            out += mag.str();
        } else {
            if (mag != Rational(1)) out += mag.str() + "*";
            out += monomial_name(p.weights(), e);
        }
    }
    return out;
}

namespace detail {

class Parser {
public:
    Parser(std::string_view text, const WeightSystem& w) : w_(w) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.push_back({text[i], i});
        end_pos_ = text.size();
    }

    WeightedPolynomial run() {
        WeightedPolynomial p(w_);
        if (chars_.empty()) throw ParseError("empty input", 0);
        int sign = 1;
        if (peek() == '-' || peek() == '+') sign = take() == '-' ? -1 : 1;
        term(p, sign);
        while (!done()) {
            const char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos());
            take();
            term(p, c == '-' ? -1 : 1);
        }
        return p;
    }

private:
    bool done() const { return at_ >= chars_.size(); }
    char peek() const { return done() ? '\0' : chars_[at_].first; }
    std::size_t pos() const { return done() ? end_pos_ : chars_[at_].second; }
    char take() { return chars_[at_++].first; }

    std::string digits() {
        std::string s;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) s += take();
        if (s.empty()) throw ParseError("expected a number", pos());
        return s;
    }

    void factor(Exponent& e) {
        if (peek() != 'x') throw ParseError(done() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'", pos());
        const std::size_t at = pos();
        take();
        const int weight = std::stoi(digits());
        std::optional<std::size_t> idx;
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] == weight) idx = i;
        if (!idx) throw UnknownVariable("unknown variable x" + std::to_string(weight) + " at position " + std::to_string(at));
        int n = 1;
        if (peek() == '^') {
            take();
            n = std::stoi(digits());
        }
        e[*idx] += n;
    }

    void term(WeightedPolynomial& p, int sign) {
        Exponent e(w_.size(), 0);
        Rational c(sign);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            BigInt num(digits());
            BigInt den(1);
            if (peek() == '/') {
                take();
                const std::size_t at = pos();
                den = BigInt(digits());
                if (den == 0) throw ParseError("zero denominator", at);
            }
            c *= Rational(num, den);
            while (peek() == '*') {
                take();
                factor(e);
            }
        } else {
            factor(e);
            while (peek() == '*') {
                take();
                factor(e);
            }
        }
        p.add_term(e, c);
    }

    const WeightSystem& w_;
    std::vector<std::pair<char, std::size_t>> chars_;
    std::size_t at_ = 0;
    std::size_t end_pos_ = 0;
};

}  // namespace detail

/*
 * poly := term (('+'|'-') term)*, an optional leading sign allowed;
 * term := coeff ('*' factor)* | factor ('*' factor)*;  factor := 'x' nat ('^' nat)?;
 * coeff := integer | integer '/' integer.  Whitespace is ignored.
 */
inline WeightedPolynomial parse(std::string_view text, const WeightSystem& w = x12_weights()) {
    return detail::Parser(text, w).run();
}

// ---------------------------------------------------------------------------
// Substitutions

/// x_i -> c x_i + g with g of degree w_i in the other variables.
struct Rule {
    Rational c{1};
    WeightedPolynomial g;
};

class Substitution {
public:
    explicit Substitution(WeightSystem w = x12_weights()) : w_(std::move(w)), rules_(w_.size()) {}

    static Substitution identity(const WeightSystem& w = x12_weights()) { return Substitution(w); }

    const WeightSystem& weights() const { return w_; }

    /// Sets the rule for the variable of weight `weight`; GradingError if it breaks the grading.
    Substitution& set(int weight, const Rational& c, const WeightedPolynomial& g) {
        const std::size_t i = index_of(weight);
        if (c.is_zero()) throw GradingError("x" + std::to_string(weight) + " rule has zero leading coefficient");
        if (!(g.weights() == w_)) throw GradingError("rule polynomial lives in a different ring");
        if (!is_quasihomogeneous(g, weight))
            throw GradingError("x" + std::to_string(weight) + " -> ... adds terms of degree other than " + std::to_string(weight));
        if (g.involves(i)) throw GradingError("x" + std::to_string(weight) + " rule must not involve x" + std::to_string(weight));
        rules_[i] = Rule{c, g};
        return *this;
    }

    const std::optional<Rule>& rule(std::size_t i) const { return rules_[i]; }

    bool is_identity() const {
        return std::all_of(rules_.begin(), rules_.end(), [](const auto& r) { return !r || (r->c == Rational(1) && r->g.is_zero()); });
    }

    /// Image of the i-th coordinate.
    WeightedPolynomial image(std::size_t i) const {
        Exponent e(w_.size(), 0);
        e[i] = 1;
        auto x = WeightedPolynomial::monomial(e, Rational(1), w_);
        if (!rules_[i]) return x;
        return rules_[i]->c * x + rules_[i]->g;
    }

    /*
     * Exact inverse.  Each g_i only involves lighter variables, so
     * x_i -> (x_i - g_i(inverse of the lighter ones)) / c_i, built in order
     * of increasing weight.
     */
    Substitution inverse() const;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (!rules_[i]) continue;
            if (!out.empty()) out += ", ";
            out += "x" + std::to_string(w_[i]) + " -> " + print(image(i));
        }
        return out.empty() ? "identity" : out;
    }

private:
    std::size_t index_of(int weight) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] == weight) return i;
        throw UnknownVariable("no variable x" + std::to_string(weight) + " in " + w_.str());
    }

    WeightSystem w_;
    std::vector<std::optional<Rule>> rules_;
};

/// p(x) -> p(phi(x)); exact expansion.
inline WeightedPolynomial substitute(const WeightedPolynomial& p, const Substitution& s) {
    if (!(p.weights() == s.weights())) throw GradingError("substitution and polynomial live in different rings");
    const std::size_t n = p.weights().size();
    std::vector<WeightedPolynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(s.image(i));
    std::vector<std::vector<WeightedPolynomial>> powers(n);
    auto power = [&](std::size_t i, int k) -> const WeightedPolynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(WeightedPolynomial::constant(Rational(1), p.weights()));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(k)];
    };
    WeightedPolynomial out(p.weights());
    for (const auto& [e, c] : p.terms()) {
        auto t = WeightedPolynomial::constant(c, p.weights());
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

inline Substitution Substitution::inverse() const {
    Substitution inv(w_);
    std::vector<std::size_t> order(w_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w_[a] < w_[b]; });
    for (std::size_t i : order) {
        if (!rules_[i]) continue;
        const Rational ci = rules_[i]->c.inverse();
        inv.rules_[i] = Rule{ci, -(substitute(rules_[i]->g, inv) * ci)};
    }
    return inv;
}

}  // namespace qfano::nf
