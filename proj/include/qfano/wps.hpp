#pragma once

#include "qfano/errors.hpp"
#include "qfano/power_series.hpp"
#include "qfano/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qfano {

using Exponent = std::vector<int>;

/// Positive integer weights of a weighted projective space.
class WeightSystem {
public:
    WeightSystem() = default;
    explicit WeightSystem(std::vector<int> weights) : w_(std::move(weights)) {
        if (w_.empty()) throw std::invalid_argument("WeightSystem: no weights");
        for (int w : w_)
            if (w < 1) throw std::invalid_argument("WeightSystem: weights must be >= 1");
    }
    WeightSystem(std::initializer_list<int> w) : WeightSystem(std::vector<int>(w)) {}

    std::size_t size() const { return w_.size(); }
    int operator[](std::size_t i) const { return w_[i]; }
    std::span<const int> weights() const { return w_; }
    auto begin() const { return w_.begin(); }
    auto end() const { return w_.end(); }

    int sum() const { return std::accumulate(w_.begin(), w_.end(), 0); }
    BigInt product() const {
        BigInt p = 1;
        for (int w : w_) p *= w;
        return p;
    }

    /// "P(3,4,5,6,7)".
    std::string str() const {
        std::ostringstream os;
        os << "P(";
        for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << w_[i];
        os << ")";
        return os.str();
    }

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<int> w_;
};

/// True iff every (n-1)-element subset of the weights has gcd 1.
inline bool well_formed(const WeightSystem& w) {
    const std::size_t n = w.size();
    if (n < 2) return true;
    for (std::size_t skip = 0; skip < n; ++skip) {
        int g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != skip) g = std::gcd(g, w[i]);
        if (g != 1) return false;
    }
    return true;
}

/// Weighted degree of an exponent vector.
inline int weighted_degree(const WeightSystem& w, std::span<const int> exps) {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * w[i];
    return d;
}

/// All exponent vectors of weighted degree d, descending lexicographic order.
inline std::vector<Exponent> monomials(const WeightSystem& w, int d) {
    std::vector<Exponent> out;
    if (d < 0) return out;
    Exponent cur(w.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
        if (i + 1 == w.size()) {
            if (rest % w[i] == 0) {
                cur[i] = rest / w[i];
                out.push_back(cur);
            }
            cur[i] = 0;
            return;
        }
        for (int a = rest / w[i]; a >= 0; --a) {
            cur[i] = a;
            self(self, i + 1, rest - a * w[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

/// "x3^2*x6" style rendering, variables named by their weight.
inline std::string monomial_name(const WeightSystem& w, std::span<const int> exps) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(w[i]);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

/*
 * A weighted hypersurface X_d in P(w0..w4), or the weighted projective space
 * P(w0..w3) itself when the degree is 0.  Weights are kept sorted ascending,
 * so vertex indices refer to that order.
 */
class HypersurfaceShape {
public:
    HypersurfaceShape(std::vector<int> weights, int degree) : degree_(degree) {
        std::sort(weights.begin(), weights.end());
        weights_ = WeightSystem(std::move(weights));
        if (degree_ < 0) throw std::invalid_argument("HypersurfaceShape: negative degree");
        if (degree_ == 0 && weights_.size() != 4)
            throw std::invalid_argument("HypersurfaceShape: a weighted projective space needs 4 weights");
        if (degree_ > 0 && weights_.size() != 5)
            throw std::invalid_argument("HypersurfaceShape: a hypersurface needs 5 weights");
        if (degree_ > 0 && monomials(weights_, degree_).empty())
            throw std::invalid_argument("HypersurfaceShape: no monomial of degree " + std::to_string(degree_));
    }

    static HypersurfaceShape space(std::vector<int> weights) { return {std::move(weights), 0}; }

    const WeightSystem& weights() const { return weights_; }
    int degree() const { return degree_; }
    bool is_space() const { return degree_ == 0; }
    std::size_t size() const { return weights_.size(); }

    std::string str() const {
        if (is_space()) return weights_.str();
        return "X_" + std::to_string(degree_) + " in " + weights_.str();
    }

    friend bool operator==(const HypersurfaceShape&, const HypersurfaceShape&) = default;

private:
    WeightSystem weights_;
    int degree_ = 0;
};

inline int fano_index(const HypersurfaceShape& s) {
    const int q = s.weights().sum() - s.degree();
    if (q <= 0) throw NotFano(s.str() + " has Fano index " + std::to_string(q));
    return q;
}

/// A^3 = d / prod(w) for a hypersurface, 1 / prod(w) for the space itself.
inline Rational degree_a3(const HypersurfaceShape& s) {
    return Rational(BigInt(s.is_space() ? 1 : s.degree()), s.weights().product());
}

inline PowerSeries hilbert(const HypersurfaceShape& s, std::size_t order = kDefaultOrder) {
    ProductSpec spec;
    spec.denominator_exponents.assign(s.weights().begin(), s.weights().end());
    if (!s.is_space()) spec.numerator_exponents.push_back(s.degree());
    return expand_product(spec, order);
}

/// g = h^0(qA) - 2, read from a series that reaches t^q.
inline std::int64_t genus_from_series(const PowerSeries& series, int q) {
    return series.at(static_cast<std::size_t>(q)).to_int64() - 2;
}

inline std::int64_t genus(const HypersurfaceShape& s) {
    const int q = fano_index(s);
    return genus_from_series(hilbert(s, static_cast<std::size_t>(q)), q);
}

// ---------------------------------------------------------------------------
// Cyclic quotient singularities

/// Terminal cyclic quotient 1/r(1, r-1, b), b stored in canonical form min(b, r-b).
struct QuotientType {
    int r = 1;
    int b = 1;

    std::string str() const { return "1/" + std::to_string(r) + "(1," + std::to_string(r - 1) + "," + std::to_string(b) + ")"; }

    friend bool operator==(const QuotientType&, const QuotientType&) = default;
    friend auto operator<=>(const QuotientType&, const QuotientType&) = default;
};

inline int mod(long long a, int r) {
    const long long m = a % r;
    return static_cast<int>(m < 0 ? m + r : m);
}

inline int inverse_mod(int a, int r) {
    a = mod(a, r);
    for (int x = 1; x < r; ++x)
        if (mod(static_cast<long long>(a) * x, r) == 1) return x;
    throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not a unit mod " + std::to_string(r));
}

/// Outcome of bringing raw residues to the shape (1, r-1, b) by a unit.
struct Orientation {
    int unit = 1;        // u with u * raw == {1, r-1, oriented_b} as multisets
    int oriented_b = 1;  // b as produced by that unit
    int b = 1;           // canonical min(b, r - b) over all admissible units
};

/*
 * Exhaustive search over units u of Z/r for u * raw == {1, -1, b}.  Residues
 * must all be units mod r (isolated point), and some pair must cancel
 * (terminal criterion); otherwise NotTerminalIsolated.
 */
inline Orientation orient_type(int r, std::array<int, 3> raw) {
    if (r < 2) throw std::invalid_argument("orient_type: index must be >= 2");
    for (int& a : raw) {
        a = mod(a, r);
        if (a == 0 || std::gcd(a, r) != 1)
            throw NotTerminalIsolated("1/" + std::to_string(r) + "(" + std::to_string(raw[0]) + "," + std::to_string(raw[1]) +
                                      "," + std::to_string(raw[2]) + ") is not an isolated terminal quotient");
    }
    std::optional<Orientation> best;
    for (int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::array<int, 3> v{};
        for (std::size_t i = 0; i < 3; ++i) v[i] = mod(static_cast<long long>(u) * raw[i], r);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j || v[i] != 1 || v[j] != r - 1) continue;
                const int ob = v[3 - i - j];
                const int canon = std::min(ob, r - ob);
                if (!best || canon < best->b) best = Orientation{u, ob, canon};
            }
        }
    }
    if (!best)
        throw NotTerminalIsolated("1/" + std::to_string(r) + "(" + std::to_string(raw[0]) + "," + std::to_string(raw[1]) + "," +
                                  std::to_string(raw[2]) + ") is not of the form 1/r(1,-1,b)");
    return *best;
}

inline int normalize_type(int r, std::array<int, 3> raw) { return orient_type(r, raw).b; }

/// A singular point found on a vertex or edge, with its raw local weights.
struct SingularPoint {
    QuotientType type;
    std::array<int, 3> raw{};  // weights of the local orbifold coordinates mod r
    Orientation orientation;
    int count = 1;
    std::string location;
};

/// Monomials that keep X quasi-smooth at one coordinate vertex.
struct VertexRequirement {
    std::size_t vertex = 0;
    std::vector<Exponent> monomials;  // x_i^n of degree d, then x_i^n x_j (n >= 1)
};

inline std::vector<VertexRequirement> corner_requirements(const HypersurfaceShape& s) {
    if (s.is_space()) throw std::invalid_argument("corner_requirements: needs a hypersurface");
    const auto& w = s.weights();
    const int d = s.degree();
    std::vector<VertexRequirement> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        VertexRequirement req{i, {}};
        if (d % w[i] == 0) {
            Exponent e(w.size(), 0);
            e[i] = d / w[i];
            req.monomials.push_back(e);
        }
        for (int n = 1; n * w[i] < d; ++n) {
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (j == i || n * w[i] + w[j] != d) continue;
                Exponent e(w.size(), 0);
                e[i] = n;
                e[j] = 1;
                req.monomials.push_back(e);
            }
        }
        out.push_back(std::move(req));
    }
    return out;
}

inline std::string vertex_label(const HypersurfaceShape& s, std::size_t i) { return "vertex w=" + std::to_string(s.weights()[i]); }

/// Vertex analysis with an explicit choice of eliminated variable j.
inline std::optional<SingularPoint> vertex_singularity_via(const HypersurfaceShape& s, std::size_t i, std::optional<std::size_t> j) {
    const auto& w = s.weights();
    const int r = w[i];
    if (r == 1) return std::nullopt;
    std::array<int, 3> raw{};
    std::size_t k = 0;
    for (std::size_t m = 0; m < w.size(); ++m)
        if (m != i && (!j || m != *j)) raw[k++] = mod(w[m], r);
    const Orientation o = orient_type(r, raw);
    return SingularPoint{QuotientType{r, o.b}, raw, o, 1, vertex_label(s, i)};
}

/// Eliminable variables j at vertex i: those with x_i^n x_j of degree d.
inline std::vector<std::size_t> vertex_tangent_choices(const HypersurfaceShape& s, std::size_t i) {
    std::vector<std::size_t> out;
    const auto reqs = corner_requirements(s);
    for (const auto& e : reqs[i].monomials)
        if (e[i] * s.weights()[i] != s.degree())
            for (std::size_t j = 0; j < e.size(); ++j)
                if (j != i && e[j] == 1) out.push_back(j);
    return out;
}

/*
 * Singularity of X at the coordinate vertex P_i.  None when a pure power of
 * x_i has degree d (P_i is not on X) or w_i = 1.  Otherwise x_j is eliminated
 * via x_i^n x_j and the point is 1/w_i(remaining three weights).
 */
inline std::optional<SingularPoint> vertex_singularity(const HypersurfaceShape& s, std::size_t i) {
    if (i >= s.size()) throw std::out_of_range("vertex_singularity: bad vertex");
    if (s.is_space()) return vertex_singularity_via(s, i, std::nullopt);
    const int wi = s.weights()[i];
    if (s.degree() % wi == 0) return std::nullopt;
    const auto choices = vertex_tangent_choices(s, i);
    if (choices.empty())
        throw NotQuasiSmoothAtVertex("not quasi-smooth at " + vertex_label(s, i));
    return vertex_singularity_via(s, i, choices.front());
}

inline bool has_binary_monomial(const WeightSystem& w, std::size_t i, std::size_t j, int d) {
    for (int a = 0; a * w[i] <= d; ++a)
        if ((d - a * w[i]) % w[j] == 0) return true;
    return false;
}

/// General-member points on the edge P_iP_j: none when gcd(w_i, w_j) = 1.
inline std::optional<SingularPoint> edge_singularities(const HypersurfaceShape& s, std::size_t i, std::size_t j) {
    if (i >= s.size() || j >= s.size() || i == j) throw std::out_of_range("edge_singularities: bad edge");
    if (i > j) std::swap(i, j);
    const auto& w = s.weights();
    const int m = std::gcd(w[i], w[j]);
    if (m == 1) return std::nullopt;
    const std::string where = "edge w=(" + std::to_string(w[i]) + "," + std::to_string(w[j]) + ")";
    if (s.is_space()) throw EdgeContained(s.str() + " is singular along the " + where);
    const int d = s.degree();
    if (!has_binary_monomial(w, i, j, d)) throw EdgeContained("X contains the " + where);
    const long long num = static_cast<long long>(d) * m;
    const long long den = static_cast<long long>(w[i]) * w[j];
    if (num % den != 0) throw NotGeneral("non-integral point count on the " + where);
    std::array<int, 3> raw{};
    std::size_t k = 0;
    for (std::size_t t = 0; t < w.size(); ++t)
        if (t != i && t != j) raw[k++] = mod(w[t], m);
    const Orientation o = orient_type(m, raw);
    return SingularPoint{QuotientType{m, o.b}, raw, o, static_cast<int>(num / den), where};
}

/// Every vertex and edge singularity, in vertex-then-edge order.
inline std::vector<SingularPoint> singular_points(const HypersurfaceShape& s) {
    std::vector<SingularPoint> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (auto p = vertex_singularity(s, i)) out.push_back(*p);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (auto p = edge_singularities(s, i, j); p && p->count > 0) out.push_back(*p);
    return out;
}

struct BasketEntry {
    QuotientType type;
    int count = 0;
    friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
};

/// Multiset of quotient types, sorted by (r, b).
class Basket {
public:
    Basket() = default;
    explicit Basket(std::vector<BasketEntry> entries) {
        for (const auto& e : entries) add(e.type, e.count);
    }

    void add(QuotientType t, int count = 1) {
        if (t.r < 2) throw std::invalid_argument("Basket: index must be >= 2");
        if (count <= 0) return;
        auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                                   [](const BasketEntry& e, const QuotientType& q) { return e.type < q; });
        if (it != entries_.end() && it->type == t)
            it->count += count;
        else
            entries_.insert(it, BasketEntry{t, count});
    }

    const std::vector<BasketEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Index multiset, ascending: {2,3,3,5,7}.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.count), e.type.r);
        return out;
    }

    /// Sum over points of (r - 1/r).
    Rational defect() const {
        Rational s;
        for (const auto& e : entries_) s += Rational(e.count) * (Rational(e.type.r) - Rational(1, e.type.r));
        return s;
    }

    std::string str() const {
        std::string s = "(";
        bool first = true;
        for (int r : indices()) {
            s += (first ? "" : ", ") + std::to_string(r);
            first = false;
        }
        return s + ")";
    }

    friend bool operator==(const Basket&, const Basket&) = default;

private:
    std::vector<BasketEntry> entries_;
};

inline Basket basket(const HypersurfaceShape& s) {
    Basket b;
    for (const auto& p : singular_points(s)) b.add(p.type, p.count);
    return b;
}

/*
 * Coordinate strata contained in the base locus of |O(d)|: minimal sets Z
 * of variables such that every degree-d monomial involves a variable of Z.
 * Each stratum is reported as the (ascending) indices set to zero.
 */
inline std::vector<std::vector<std::size_t>> monomial_base_locus(const WeightSystem& w, int d) {
    const auto monos = monomials(w, d);
    if (monos.empty()) throw std::invalid_argument("monomial_base_locus: no monomials of degree " + std::to_string(d));
    const std::size_t n = w.size();
    const unsigned full = (1U << n) - 1U;
    std::vector<unsigned> hits;
    for (unsigned z = 1; z < full; ++z) {
        bool all = std::all_of(monos.begin(), monos.end(), [&](const Exponent& e) {
            for (std::size_t i = 0; i < n; ++i)
                if ((z >> i & 1U) && e[i] > 0) return true;
            return false;
        });
        if (all) hits.push_back(z);
    }
    std::vector<std::vector<std::size_t>> out;
    for (unsigned z : hits) {
        bool minimal = std::none_of(hits.begin(), hits.end(), [z](unsigned y) { return y != z && (y & z) == y; });
        if (!minimal) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (z >> i & 1U) idx.push_back(i);
        out.push_back(std::move(idx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Aggregate report

struct StratumVerdict {
    std::string stratum;
    bool ok = true;
    std::string detail;
};

struct AnalysisReport {
    HypersurfaceShape shape;
    int fano_index = 0;
    Rational a3;
    Basket basket;
    std::int64_t genus = 0;
    PowerSeries hilbert{0};
    std::vector<StratumVerdict> quasi_smoothness;
    std::vector<std::string> warnings;
};

/*
 * Runs every stratum check and collects failures as verdicts and warnings
 * instead of throwing, so shapes like form (b) still get a report.
 */
inline AnalysisReport analyze(const HypersurfaceShape& s, std::size_t order = kDefaultOrder) {
    AnalysisReport rep{s, fano_index(s), degree_a3(s), {}, 0, PowerSeries(0), {}, {}};
    rep.hilbert = hilbert(s, std::max<std::size_t>(order, static_cast<std::size_t>(rep.fano_index)));
    rep.genus = genus_from_series(rep.hilbert, rep.fano_index);
    rep.hilbert = rep.hilbert.truncated(order);
    if (!well_formed(s.weights())) rep.warnings.push_back("weights " + s.weights().str() + " are not well-formed");

    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string label = vertex_label(s, i);
        try {
            auto p = vertex_singularity(s, i);
            if (p) {
                rep.basket.add(p->type, p->count);
                rep.quasi_smoothness.push_back({label, true, p->type.str()});
            } else {
                const bool off = !s.is_space() && s.degree() % s.weights()[i] == 0;
                rep.quasi_smoothness.push_back({label, true, off ? "not on X" : "smooth"});
            }
        } catch (const Error& e) {
            rep.quasi_smoothness.push_back({label, false, e.what()});
            rep.warnings.emplace_back(e.what());
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (std::gcd(s.weights()[i], s.weights()[j]) == 1) continue;
            const std::string label = "edge w=(" + std::to_string(s.weights()[i]) + "," + std::to_string(s.weights()[j]) + ")";
            try {
                auto p = edge_singularities(s, i, j);
                rep.basket.add(p->type, p->count);
                rep.quasi_smoothness.push_back({label, true, std::to_string(p->count) + " x " + p->type.str()});
            } catch (const Error& e) {
                rep.quasi_smoothness.push_back({label, false, e.what()});
                rep.warnings.emplace_back(e.what());
            }
        }
    }
    if (rep.basket.defect() >= Rational(24)) rep.warnings.push_back("basket violates the bound sum(r - 1/r) < 24");
    return rep;
}

}  // namespace qfano
