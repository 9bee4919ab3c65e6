#pragma once

#include "qfano/errors.hpp"
#include "qfano/power_series.hpp"
#include "qfano/rational.hpp"
#include "qfano/wps.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qfano {

/// Fano indices a Q-Fano threefold can have.
inline constexpr std::array<int, 13> kAllowedFanoIndices{1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 17, 19};

inline bool allowed_fano_index(int q) {
    return std::find(kAllowedFanoIndices.begin(), kAllowedFanoIndices.end(), q) != kAllowedFanoIndices.end();
}

/*
 * Sign in the local consistency congruence  q * wA == sign (mod r), where wA
 * is the local index of A measured in units of K_X (A ~ wA * K_X near P).
 * Frozen by calibrating against closed-form Hilbert series; calibrate()
 * reports the sign it finds so tests can pin it.
 */
inline constexpr int kCanonicalSign = -1;

/// One basket point: type 1/r(1,-1,b) and the local index wA of A.
struct RRBasketEntry {
    int r = 2;
    int b = 1;
    int wA = 1;

    friend bool operator==(const RRBasketEntry&, const RRBasketEntry&) = default;
    friend auto operator<=>(const RRBasketEntry&, const RRBasketEntry&) = default;
};

inline bool consistent(const RRBasketEntry& e, int q, int sign = kCanonicalSign) {
    return std::gcd(e.b, e.r) == 1 && std::gcd(e.wA, e.r) == 1 && mod(static_cast<long long>(q) * e.wA - sign, e.r) == 0;
}

/// Numerical input to orbifold Riemann-Roch; chi(O_X) = 1 throughout.
struct FanoData {
    int q = 1;
    Rational a3;
    std::vector<RRBasketEntry> entries;

    void validate() const {
        if (!allowed_fano_index(q)) throw InvalidIndex("Fano index " + std::to_string(q) + " is not attainable");
        if (a3 <= Rational(0)) throw std::invalid_argument("FanoData: A^3 must be positive");
        for (const auto& e : entries)
            if (e.r < 2 || std::gcd(e.b, e.r) != 1 || std::gcd(e.wA, e.r) != 1)
                throw std::invalid_argument("FanoData: malformed basket entry");
    }

    friend bool operator==(const FanoData&, const FanoData&) = default;
};

/// A . c_2 from 24 chi(O) - sum(r - 1/r) = -K . c_2.
inline Rational a_c2(const FanoData& data) {
    Rational defect;
    for (const auto& e : data.entries) defect += Rational(e.r) - Rational(1, e.r);
    return (Rational(24) - defect) / Rational(data.q);
}

/// Periodic correction of a 1/r(1,-1,b) point for a divisor of local index i.
inline Rational local_c(int r, int b, int i) {
    if (i < 0 || i >= r) throw std::out_of_range("local_c: index must be reduced mod r");
    Rational c(static_cast<std::int64_t>(-i) * (static_cast<std::int64_t>(r) * r - 1), 12LL * r);
    for (int j = 1; j < i; ++j) {
        const int x = mod(static_cast<long long>(j) * b, r);
        c += Rational(static_cast<std::int64_t>(x) * (r - x), 2LL * r);
    }
    return c;
}

/// chi(X, mA); ConventionError when the total is not an integer.
inline std::int64_t chi(const FanoData& data, int m) {
    if (m < 0) throw std::invalid_argument("chi: m must be non-negative");
    const Rational mm(m);
    Rational v = Rational(1) + mm * Rational(m + data.q) * Rational(2 * m + data.q) * data.a3 / Rational(12) +
                 mm * a_c2(data) / Rational(12);
    for (const auto& e : data.entries) v += local_c(e.r, e.b, mod(static_cast<long long>(m) * e.wA, e.r));
    if (!v.is_integer())
        throw ConventionError("chi(" + std::to_string(m) + "A) = " + v.str() + " is not an integer");
    return v.to_int64();
}

inline PowerSeries hilbert_rr(const FanoData& data, std::size_t order = kDefaultOrder) {
    PowerSeries s(order);
    for (std::size_t m = 0; m <= order; ++m) s[m] = Rational(chi(data, static_cast<int>(m)));
    return s;
}

// ---------------------------------------------------------------------------
// Calibration

/// Basket point whose b / wA orientation is not yet pinned.
struct CandidateEntry {
    int r = 2;
    int b = 1;
    int w = 1;
};

/*
 * Candidate entries read off a shape's singular points.  In coordinates
 * where the point is 1/r(1,-1,b) the class A has character u and the
 * canonical form has character b, so A ~ (u / b) K up to the sign that
 * calibration resolves.
 */
inline std::vector<CandidateEntry> candidate_entries(const HypersurfaceShape& s) {
    std::vector<CandidateEntry> out;
    for (const auto& p : singular_points(s)) {
        const int r = p.type.r;
        const int w = mod(static_cast<long long>(p.orientation.unit) * inverse_mod(p.orientation.oriented_b, r), r);
        for (int c = 0; c < p.count; ++c) out.push_back({r, p.orientation.oriented_b, w});
    }
    return out;
}

struct CalibrationResult {
    FanoData data;
    int sign = kCanonicalSign;
    bool sign_constrained = false;  // false when every point has r <= 2
    std::size_t assignments_tried = 0;
};

/*
 * Searches b <-> r-b and wA <-> r-wA per entry for the assignments whose
 * Riemann-Roch series agrees with `oracle` through its order.  Assignments
 * that coincide after reducing b to min(b, r-b) are identified, since the
 * correction term is symmetric in b.  Exactly one class must survive.
 */
inline CalibrationResult calibrate(int q, const Rational& a3, const std::vector<CandidateEntry>& candidates,
                                   const PowerSeries& oracle) {
    const std::size_t n = candidates.size();
    if (n > 20) throw CalibrationError("calibrate: too many basket entries");
    std::set<std::vector<RRBasketEntry>> seen;
    std::vector<std::vector<RRBasketEntry>> matches;
    std::size_t tried = 0;
    for (unsigned long mask = 0; mask < (1UL << (2 * n)); ++mask) {
        std::vector<RRBasketEntry> entries;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& c = candidates[i];
            const int b = (mask >> (2 * i) & 1UL) ? c.r - c.b : c.b;
            const int w = (mask >> (2 * i + 1) & 1UL) ? c.r - c.w : c.w;
            entries.push_back({c.r, std::min(b, c.r - b), mod(w, c.r)});
        }
        std::sort(entries.begin(), entries.end());
        if (!seen.insert(entries).second) continue;
        ++tried;
        FanoData data{q, a3, entries};
        bool ok = true;
        try {
            for (std::size_t m = 0; m <= oracle.order() && ok; ++m)
                ok = Rational(chi(data, static_cast<int>(m))) == oracle[m];
        } catch (const ConventionError&) {
            ok = false;
        }
        if (ok) matches.push_back(entries);
    }
    if (matches.empty()) throw CalibrationError("no orientation matches the oracle series");
    if (matches.size() > 1)
        throw CalibrationError(std::to_string(matches.size()) + " distinct orientations match the oracle series");

    CalibrationResult res{FanoData{q, a3, matches.front()}, kCanonicalSign, false, tried};
    std::optional<int> sign;
    for (const auto& e : res.data.entries) {
        if (e.r <= 2) continue;
        const int v = mod(static_cast<long long>(q) * e.wA, e.r);
        const int s = v == 1 ? 1 : v == e.r - 1 ? -1 : 0;
        if (s == 0 || (sign && *sign != s)) throw CalibrationError("calibrated entries violate the local congruence");
        sign = s;
    }
    if (sign) {
        res.sign = *sign;
        res.sign_constrained = true;
    }
    return res;
}

/// Calibrates a shape's basket against its own closed-form series.
inline CalibrationResult calibrate_shape(const HypersurfaceShape& s, std::size_t order = 24) {
    return calibrate(fano_index(s), degree_a3(s), candidate_entries(s), hilbert(s, order));
}

// ---------------------------------------------------------------------------
// Generator inference

struct GeneratorInference {
    std::vector<int> generator_degrees;  // ascending multiset
    std::optional<int> first_relation;
};

/*
 * Greedy deficit method: at each degree m add (c_m - free count) generators
 * while that is positive; the first m where the free algebra on the
 * generators found so far outgrows c_m is the first relation degree.
 */
inline GeneratorInference infer_generators(const PowerSeries& series) {
    if (series[0] != Rational(1)) throw InconsistentSeries("series must start with 1");
    for (std::size_t m = 0; m <= series.order(); ++m)
        if (!series[m].is_integer() || series[m] < Rational(0))
            throw InconsistentSeries("coefficient of t^" + std::to_string(m) + " is not a non-negative integer");
    GeneratorInference out;
    for (std::size_t m = 1; m <= series.order(); ++m) {
        const auto free = static_cast<std::int64_t>(partition_count(out.generator_degrees, static_cast<std::int64_t>(m)));
        const std::int64_t c = series[m].to_int64();
        if (free > c) {
            out.first_relation = static_cast<int>(m);
            break;
        }
        out.generator_degrees.insert(out.generator_degrees.end(), static_cast<std::size_t>(c - free), static_cast<int>(m));
    }
    return out;
}

}  // namespace qfano
