#pragma once

#include "qfano/errors.hpp"
#include "qfano/rational.hpp"
#include "qfano/riemann_roch.hpp"
#include "qfano/wps.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace qfano::sarkisov {

/// Fano index of the threefold the links start from.
inline constexpr int kSourceIndex = 13;

/// Degrees k of the linear systems |kA_X| tracked through a link.
inline constexpr std::array<int, 5> kTrackedDegrees{3, 4, 5, 6, 7};

/// The degree-6 system is the one whose canonical threshold drives the link.
inline constexpr int kPencilDegree = 6;

inline const HypersurfaceShape& source_shape() {
    static const HypersurfaceShape x12({3, 4, 5, 6, 7}, 12);
    return x12;
}

/// dim |kA_X| = h^0(kA_X) - 1 on the source threefold (-1 when empty).
inline int linear_system_dim(int k) {
    static const PowerSeries series = hilbert(source_shape(), 30);
    return static_cast<int>(series.at(static_cast<std::size_t>(k)).to_int64()) - 1;
}

/// beta_k == t * alpha (mod Z) for the Kawamata blowup of an index-r point.
inline int beta_congruence(int q, int r, int k) {
    if (std::gcd(q, r) != 1) throw std::invalid_argument("beta_congruence: q and r must be coprime");
    return mod(static_cast<long long>(k) * inverse_mod(q, r), r);
}

enum class CaseId { NG, P2, P3, P5, P7 };

inline std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::NG: return "NG";
        case CaseId::P2: return "P2";
        case CaseId::P3: return "P3";
        case CaseId::P5: return "P5";
        case CaseId::P7: return "P7";
    }
    return "?";
}

inline std::optional<CaseId> parse_case(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (CaseId id : {CaseId::NG, CaseId::P2, CaseId::P3, CaseId::P5, CaseId::P7})
        if (case_name(id) == s) return id;
    return std::nullopt;
}

/*
 * Center of the extremal blowup.  NG is a curve or a Gorenstein point, where
 * alpha and every beta_k are integers; the P-cases are the Kawamata blowups
 * of the index-r points (two discrepancies for the index-3 points).
 */
struct CenterCase {
    CaseId id = CaseId::NG;
    std::optional<int> r;
    std::vector<Rational> alphas;
    int k = kPencilDegree;  // degree of the equation that is enumerated
    std::string description;

    /// 13^{-1} mod r.
    std::optional<int> u() const {
        if (!r) return std::nullopt;
        return inverse_mod(kSourceIndex, *r);
    }
};

/// beta_k lower bound: beta_6 >= 2 alpha from the threshold bound, else beta_k >= 0.
inline Rational beta_floor(const Rational& alpha, int k) { return k == kPencilDegree ? Rational(2) * alpha : Rational(0); }

/// Residue class of beta_k mod Z.
inline Rational beta_class(const CenterCase& c, const Rational& alpha, int k) {
    if (!c.r) return Rational(0);
    return (Rational(beta_congruence(kSourceIndex, *c.r, k)) * alpha).frac();
}

/// Least admissible beta_k: in its class and above beta_floor.
inline Rational beta_min(const CenterCase& c, const Rational& alpha, int k) {
    const Rational cls = beta_class(c, alpha, k);
    const Rational lo = beta_floor(alpha, k);
    if (cls >= lo) return cls;
    const Rational steps = lo - cls;
    BigInt n = steps.floor();
    if (Rational(n) < steps) n += 1;
    return cls + Rational(n);
}

inline int max_target_index() { return kAllowedFanoIndices.back(); }

inline CenterCase center_case(CaseId id) {
    switch (id) {
        case CaseId::NG: {
            // k qhat >= (13 beta - k alpha) e >= (26 - k) alpha, so alpha is bounded.
            CenterCase c{id, std::nullopt, {}, kPencilDegree, "curve or Gorenstein point (integral alpha)"};
            const int bound = kPencilDegree * max_target_index() / (2 * kSourceIndex - kPencilDegree);
            for (int a = 1; a <= bound; ++a) c.alphas.emplace_back(a);
            return c;
        }
        case CaseId::P2: return {id, 2, {Rational(1, 2)}, kPencilDegree, "Kawamata blowup of the index-2 point"};
        case CaseId::P3: return {id, 3, {Rational(1, 3), Rational(2, 3)}, kPencilDegree, "extremal blowup of an index-3 point"};
        case CaseId::P5: return {id, 5, {Rational(1, 5)}, 4, "Kawamata blowup of the index-5 point"};
        case CaseId::P7: return {id, 7, {Rational(1, 7)}, kPencilDegree, "Kawamata blowup of the index-7 point"};
    }
    throw std::invalid_argument("center_case: unknown case");
}

// ---------------------------------------------------------------------------
// Candidates

struct Split {
    int s = 0;
    Rational beta;
    friend bool operator==(const Split&, const Split&) = default;
};

enum class Verdict { Pending, Passed, Eliminated };

/// F1 torsion, F2 genus, F3 effectivity, F4 asserted geometric elimination.
enum class FilterId { None, Torsion, Genus, Effectivity, Asserted };

inline std::string filter_code(FilterId f) {
    switch (f) {
        case FilterId::None: return "-";
        case FilterId::Torsion: return "F1";
        case FilterId::Genus: return "F2";
        case FilterId::Effectivity: return "F3";
        case FilterId::Asserted: return "F4";
    }
    return "?";
}

inline std::string filter_title(FilterId f) {
    switch (f) {
        case FilterId::None: return "none";
        case FilterId::Torsion: return "torsion";
        case FilterId::Genus: return "genus";
        case FilterId::Effectivity: return "effectivity";
        case FilterId::Asserted: return "asserted";
    }
    return "?";
}

/// Admissible torsion order of Cl for a Fano of index qhat, with known invariants.
struct TorsionRow {
    int order = 1;
    std::vector<int> basket;  // empty when the row carries no data
    std::optional<Rational> a3;
    std::optional<int> genus;

    std::string str() const {
        std::string s = "|T|=" + std::to_string(order);
        if (!basket.empty()) {
            s += " B=(";
            for (std::size_t i = 0; i < basket.size(); ++i) s += (i ? "," : "") + std::to_string(basket[i]);
            s += ")";
        }
        if (a3) s += " A^3=" + a3->str();
        if (genus) s += " g=" + std::to_string(*genus);
        return s;
    }
    friend bool operator==(const TorsionRow&, const TorsionRow&) = default;
};

/*
 * Torsion orders allowed for a Q-Fano threefold of index qhat >= 4.  Orders
 * at least 3 occur only in the three listed rows; order 2 is not excluded
 * for qhat in {4, 5, 7}.
 */
inline std::vector<TorsionRow> torsion_table(int qhat) {
    if (!allowed_fano_index(qhat)) throw InvalidIndex("index " + std::to_string(qhat) + " is not attainable");
    if (qhat < 4) throw InvalidIndex("torsion table is only defined for index >= 4");
    std::vector<TorsionRow> rows{TorsionRow{1, {}, std::nullopt, std::nullopt}};
    if (qhat >= 8 || qhat == 6) return rows;
    rows.push_back(TorsionRow{2, {}, std::nullopt, std::nullopt});
    if (qhat == 5) rows.push_back(TorsionRow{3, {2, 9, 9}, Rational(1, 18), 2});
    if (qhat == 4) {
        rows.push_back(TorsionRow{3, {9, 9}, Rational(1, 9), 3});
        rows.push_back(TorsionRow{5, {5, 5, 5, 5}, Rational(1, 5), 5});
    }
    return rows;
}

struct LinkCandidate {
    Rational alpha;
    int qhat = 0;
    int e = 0;
    int k = kPencilDegree;
    int s = 0;        // s_k for the enumerated degree
    Rational beta;    // beta_k for the enumerated degree
    bool birational = true;

    std::map<int, std::vector<Split>> splits;  // every tracked degree
    std::vector<TorsionRow> torsion_rows;      // rows still admissible
    std::optional<WeightSystem> target;
    std::string target_reason;

    Verdict verdict = Verdict::Pending;
    FilterId filter = FilterId::None;
    std::string reason;
    std::vector<std::string> notes;

    /// Unique s_k when determined.
    std::optional<int> unique_s(int degree) const {
        auto it = splits.find(degree);
        if (it == splits.end() || it->second.size() != 1) return std::nullopt;
        return it->second.front().s;
    }

    /// Possible d with F ~ dA_X, from the admissible torsion rows.
    std::vector<int> d_values() const {
        std::vector<int> out;
        for (const auto& row : torsion_rows) out.push_back(row.order * e);
        return out;
    }

    /// Left side minus right side of  k qhat = 13 s_k + (13 beta_k - k alpha) e.
    Rational residual() const {
        return Rational(k * qhat) - Rational(kSourceIndex * s) - (Rational(kSourceIndex) * beta - Rational(k) * alpha) * Rational(e);
    }

    std::string key() const {
        return "(alpha=" + alpha.str() + ", qhat=" + std::to_string(qhat) + ", e=" + std::to_string(e) + ", s" + std::to_string(k) +
               "=" + std::to_string(s) + ", beta" + std::to_string(k) + "=" + beta.str() + ")";
    }
};

/// Minimal s_k forced by |kA_X| moving: s_k >= 1 on birational links.
inline int s_floor(int qhat, int k) { return (qhat >= 4 && linear_system_dim(k) >= 1) ? 1 : 0; }

/// All (s_k, beta_k) with  k qhat = 13 s_k + (13 beta_k - k alpha) e.
inline std::vector<Split> solve_splits(const CenterCase& c, const Rational& alpha, int qhat, int e, int k) {
    std::vector<Split> out;
    const Rational kq(k * qhat);
    const Rational ka = Rational(k) * alpha;
    const int smin = s_floor(qhat, k);
    for (Rational beta = beta_min(c, alpha, k);; beta += Rational(1)) {
        const Rational rest = kq - (Rational(kSourceIndex) * beta - ka) * Rational(e);
        if (rest < Rational(0)) break;
        const Rational s = rest / Rational(kSourceIndex);
        if (s.is_integer() && s.to_int64() >= smin) out.push_back({static_cast<int>(s.to_int64()), beta});
    }
    // ascending s
    std::reverse(out.begin(), out.end());
    return out;
}

/// Upper bound on e: (13 beta_min - k alpha) e <= k * 19.
inline int e_bound(const CenterCase& c, const Rational& alpha) {
    const Rational slope = Rational(kSourceIndex) * beta_min(c, alpha, c.k) - Rational(c.k) * alpha;
    if (slope <= Rational(0)) throw std::logic_error("e_bound: link equation is not bounded");
    return static_cast<int>((Rational(c.k * max_target_index()) / slope).floor());
}

/*
 * Every solution of the link equation for the case's degree k, over the
 * attainable target indices.  Targets of index <= 3 may be fibrations, where
 * s_k = 0 is allowed.  Sorted by (qhat, e, alpha, s).
 */
inline std::vector<LinkCandidate> enumerate_bare(const CenterCase& c) {
    std::vector<LinkCandidate> out;
    for (const Rational& alpha : c.alphas) {
        const int emax = e_bound(c, alpha);
        for (int qhat : kAllowedFanoIndices) {
            for (int e = 1; e <= emax; ++e) {
                for (const Split& sp : solve_splits(c, alpha, qhat, e, c.k)) {
                    LinkCandidate cand;
                    cand.alpha = alpha;
                    cand.qhat = qhat;
                    cand.e = e;
                    cand.k = c.k;
                    cand.s = sp.s;
                    cand.beta = sp.beta;
                    cand.birational = qhat >= 4;
                    out.push_back(std::move(cand));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const LinkCandidate& a, const LinkCandidate& b) {
        return std::tie(a.qhat, a.e, a.alpha, a.s) < std::tie(b.qhat, b.e, b.alpha, b.s);
    });
    return out;
}

/// (s_k, beta_k) splits of a candidate for another degree k; Infeasible when none.
inline std::vector<Split> determine_sk(const CenterCase& c, const LinkCandidate& cand, int k) {
    if (k == cand.k) return {Split{cand.s, cand.beta}};
    auto out = solve_splits(c, cand.alpha, cand.qhat, cand.e, k);
    if (out.empty())
        throw Infeasible("no split for k=" + std::to_string(k) + " at " + cand.key());
    return out;
}

// ---------------------------------------------------------------------------
// Second contraction

struct SecondContractionInput {
    int e = 1;
    int qhat = 1;
    std::map<int, int> s;  // k -> s_k
    int q = kSourceIndex;
    bool smooth_point = true;  // b must then be an integer
};

struct SecondContractionSolution {
    int delta = 0;
    Rational b;
    std::map<int, int> gammas;
    friend bool operator==(const SecondContractionSolution&, const SecondContractionSolution&) = default;
};

struct SecondContractionReport {
    std::vector<SecondContractionSolution> solutions;  // ascending delta within the scanned range
    std::optional<int> min_delta;
    int modulus = 1;            // admissible delta are periodic mod e
    std::vector<int> residues;  // admissible delta mod e, ignoring gamma >= 0
};

/*
 * Solves  e gamma_k = s_k delta - k  and  e b = qhat delta - q  for
 * delta in [1, delta_max] with every gamma_k a non-negative integer.
 */
inline SecondContractionReport second_contraction(const SecondContractionInput& in, int delta_max = 60) {
    if (in.e < 1) throw std::invalid_argument("second_contraction: e must be >= 1");
    SecondContractionReport rep;
    rep.modulus = in.e;
    auto congruent = [&](int delta) {
        for (const auto& [k, s] : in.s)
            if (mod(static_cast<long long>(s) * delta - k, in.e) != 0) return false;
        return !in.smooth_point || mod(static_cast<long long>(in.qhat) * delta - in.q, in.e) == 0;
    };
    for (int r = 0; r < in.e; ++r)
        if (congruent(r)) rep.residues.push_back(r);
    for (int delta = 1; delta <= delta_max; ++delta) {
        if (!congruent(delta)) continue;
        SecondContractionSolution sol{delta, Rational(in.qhat * delta - in.q, in.e), {}};
        bool ok = true;
        for (const auto& [k, s] : in.s) {
            const int g = (s * delta - k) / in.e;
            if (g < 0) ok = false;
            sol.gammas[k] = g;
        }
        if (!ok) continue;
        if (!rep.min_delta) rep.min_delta = delta;
        rep.solutions.push_back(std::move(sol));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Filters

/// h^0(P(w), nA) for a weighted projective space target.
inline std::int64_t sections(const WeightSystem& w, int n) {
    if (n < 0) return 0;
    return static_cast<std::int64_t>(partition_count(w.weights(), n));
}

/*
 * Identifies the target from its index and the s_k:
 *   index 19 and 17 pin P(3,4,5,7) and P(2,3,5,7);
 *   index >= 7 with a moving |kA_X| sent to |A| gives two distinct effective
 *   divisors in |A|, hence P(1,1,2,3);
 *   index 11 with a moving |kA_X| sent to |2A| gives P(1,2,3,5).
 */
inline void identify_target(LinkCandidate& cand) {
    auto moving_with = [&](int s_value) -> std::optional<int> {
        for (int k : kTrackedDegrees)
            if (linear_system_dim(k) >= 1 && cand.unique_s(k) == s_value) return k;
        return std::nullopt;
    };
    if (cand.qhat == 19) {
        cand.target = WeightSystem{3, 4, 5, 7};
        cand.target_reason = "index 19";
    } else if (cand.qhat == 17) {
        cand.target = WeightSystem{2, 3, 5, 7};
        cand.target_reason = "index 17";
    } else if (auto k = moving_with(1); k && cand.qhat >= 7) {
        cand.target = WeightSystem{1, 1, 2, 3};
        cand.target_reason = "index >= 7 and s" + std::to_string(*k) + "=1 with dim|" + std::to_string(*k) + "A_X|=1";
    } else if (auto k2 = moving_with(2); k2 && cand.qhat == 11) {
        cand.target = WeightSystem{1, 2, 3, 5};
        cand.target_reason = "index 11 and s" + std::to_string(*k2) + "=2 with dim|" + std::to_string(*k2) + "A_X|=1";
    }
}

/// Geometric eliminations that the numeric filters do not reach.
struct AssertedElimination {
    CaseId id;
    Rational alpha;
    int qhat;
    int e;
    std::string reason;
};

inline const std::vector<AssertedElimination>& asserted_eliminations() {
    static const std::vector<AssertedElimination> table{
        {CaseId::P3, Rational(1, 3), 4, 1,
         "torsion row |T|=5 (g=5) survives the numeric filters; excluded by an external geometric argument"},
        {CaseId::P5, Rational(1, 5), 17, 6,
         "the contracted point must be smooth, but it lies on the index-7 vertex of P(2,3,5,7)"},
    };
    return table;
}

/// Numeric sub-steps behind the asserted P5 (17,6) elimination.
inline std::vector<std::string> index7_vertex_substeps(const LinkCandidate& cand) {
    std::vector<std::string> notes;
    SecondContractionInput in{cand.e, cand.qhat, {}, kSourceIndex, true};
    for (int k : {3, 4, 7})
        if (auto s = cand.unique_s(k)) in.s[k] = *s;
    const auto rep = second_contraction(in, 6 * cand.e);
    std::string res;
    for (int r : rep.residues) res += (res.empty() ? "" : ",") + std::to_string(r);
    notes.push_back("second contraction: delta == {" + res + "} mod " + std::to_string(rep.modulus));
    if (!rep.solutions.empty()) {
        const auto& sol = rep.solutions.front();
        std::string g;
        bool all_positive = true;
        for (const auto& [k, v] : sol.gammas) {
            g += (g.empty() ? "" : " ") + ("gamma" + std::to_string(k) + "=" + std::to_string(v));
            all_positive = all_positive && v > 0;
        }
        notes.push_back("minimal delta=" + std::to_string(sol.delta) + ": b=" + sol.b.str() + " " + g);
        if (all_positive && cand.target) {
            // The point lies on the proper transforms of M_3, M_4, M_7, i.e. on
            // coordinate divisors of degrees s_3, s_4, s_7 of the target.
            std::vector<int> zeroed;
            for (int k : {3, 4, 7}) zeroed.push_back(in.s[k]);
            std::sort(zeroed.begin(), zeroed.end());
            int remaining = 0;
            for (int w : *cand.target)
                if (!std::binary_search(zeroed.begin(), zeroed.end(), w)) remaining = w;
            notes.push_back("all gamma > 0: the point lies on the divisors of degrees " + std::to_string(zeroed[0]) + "," +
                            std::to_string(zeroed[1]) + "," + std::to_string(zeroed[2]) + ", leaving the vertex of index " +
                            std::to_string(remaining));
        }
    }
    return notes;
}

/*
 * Runs F1-F4 in order; each eliminated candidate cites the first filter
 * that kills it.  Fibration candidates (qhat <= 3, not forced birational)
 * skip the torsion, genus and effectivity filters.
 */
inline std::vector<LinkCandidate> apply_filters(const CenterCase& c, std::vector<LinkCandidate> cands) {
    for (auto& cand : cands) {
        for (int k : kTrackedDegrees) cand.splits[k] = determine_sk(c, cand, k);
        cand.verdict = Verdict::Passed;
        auto eliminate = [&](FilterId f, std::string why) {
            cand.verdict = Verdict::Eliminated;
            cand.filter = f;
            cand.reason = std::move(why);
        };

        if (cand.birational && cand.qhat >= 4) {
            identify_target(cand);
            // F1: d >= 3 because |A_X| = |2A_X| is empty, and |T| = d / e.
            std::vector<TorsionRow> rows;
            for (const auto& row : torsion_table(cand.qhat))
                if (row.order * cand.e >= 3) rows.push_back(row);
            if (cand.target) {
                // A weighted projective space has torsion-free class group.
                std::erase_if(rows, [](const TorsionRow& r) { return r.order != 1; });
            }
            if (rows.empty()) {
                std::string orders;
                for (const auto& row : torsion_table(cand.qhat)) orders += (orders.empty() ? "" : ",") + std::to_string(row.order);
                eliminate(FilterId::Torsion, "d=|T|*e < 3 for every admissible |T| in {" + orders + "} (e=" + std::to_string(cand.e) + ")");
                continue;
            }
            // F2: alpha < 1 forces g(target) >= 4.
            if (cand.alpha < Rational(1)) {
                if (cand.target) {
                    const auto g = genus(HypersurfaceShape::space(std::vector<int>(cand.target->begin(), cand.target->end())));
                    if (g < 4) {
                        eliminate(FilterId::Genus, "g(" + cand.target->str() + ")=" + std::to_string(g) + " < 4");
                        continue;
                    }
                }
                std::vector<TorsionRow> kept;
                std::string dropped;
                for (const auto& row : rows) {
                    if (row.genus && *row.genus < 4)
                        dropped += (dropped.empty() ? "" : "; ") + row.str();
                    else
                        kept.push_back(row);
                }
                if (kept.empty()) {
                    eliminate(FilterId::Genus, "every admissible torsion row has g < 4: " + dropped);
                    continue;
                }
                rows = std::move(kept);
            }
            cand.torsion_rows = rows;
            // F3: the image of |kA_X| is a linear system in |s_k A| of at least the same dimension.
            if (cand.target) {
                for (int k : kTrackedDegrees) {
                    auto& sp = cand.splits[k];
                    const int need = linear_system_dim(k) + 1;
                    std::vector<Split> kept;
                    for (const auto& x : sp)
                        if (sections(*cand.target, x.s) >= need) kept.push_back(x);
                    if (kept.empty()) {
                        const int s = sp.front().s;
                        eliminate(FilterId::Effectivity, "h0(" + cand.target->str() + ", " + std::to_string(s) + "A)=" +
                                                             std::to_string(sections(*cand.target, s)) + " < " + std::to_string(need) +
                                                             " (s" + std::to_string(k) + "=" + std::to_string(s) + ")");
                        break;
                    }
                    sp = std::move(kept);
                }
                if (cand.verdict == Verdict::Eliminated) continue;
            }
        }
        // F4
        for (const auto& a : asserted_eliminations()) {
            if (a.id == c.id && a.alpha == cand.alpha && a.qhat == cand.qhat && a.e == cand.e) {
                eliminate(FilterId::Asserted, a.reason);
                if (c.id == CaseId::P5) cand.notes = index7_vertex_substeps(cand);
                break;
            }
        }
    }
    return cands;
}

/// alpha / beta_6; Undefined when beta_6 = 0.
inline Rational canonical_threshold(const Rational& alpha, const Rational& beta6) {
    if (beta6.is_zero()) throw Undefined("canonical threshold undefined for beta_6 = 0");
    return alpha / beta6;
}

/// Threshold from the least admissible beta_6 of a surviving candidate.
inline Rational canonical_threshold(const CenterCase& c, const LinkCandidate& cand) {
    auto it = cand.splits.find(kPencilDegree);
    std::vector<Split> sp = it != cand.splits.end() ? it->second : determine_sk(c, cand, kPencilDegree);
    const auto best = std::min_element(sp.begin(), sp.end(), [](const Split& a, const Split& b) { return a.beta < b.beta; });
    return canonical_threshold(cand.alpha, best->beta);
}

// ---------------------------------------------------------------------------
// Transcript

struct Transcript {
    CenterCase center;
    std::vector<LinkCandidate> bare;
    std::vector<LinkCandidate> filtered;  // same order as bare, annotated
    bool filters_applied = true;

    std::vector<const LinkCandidate*> final_set() const {
        std::vector<const LinkCandidate*> out;
        for (const auto& c : filtered)
            if (c.verdict == Verdict::Passed) out.push_back(&c);
        return out;
    }
};

inline Transcript run_case(CaseId id, bool apply = true) {
    Transcript t{center_case(id), {}, {}, apply};
    t.bare = enumerate_bare(t.center);
    if (apply) t.filtered = apply_filters(t.center, t.bare);
    return t;
}

/// Unique s_k > 0 of a survivor, the input of its second contraction.
inline SecondContractionInput second_contraction_input(const LinkCandidate& cand) {
    SecondContractionInput in{cand.e, cand.qhat, {}, kSourceIndex, true};
    for (int k : kTrackedDegrees)
        if (auto s = cand.unique_s(k); s && *s > 0) in.s[k] = *s;
    return in;
}

inline std::string splits_str(const LinkCandidate& c) {
    std::string out;
    for (const auto& [k, sp] : c.splits) {
        out += (out.empty() ? "" : " ") + ("s" + std::to_string(k) + "=");
        if (sp.size() == 1) {
            out += std::to_string(sp.front().s);
        } else {
            out += "{";
            for (std::size_t i = 0; i < sp.size(); ++i) out += (i ? "," : "") + std::to_string(sp[i].s);
            out += "}";
        }
    }
    return out;
}

/// Plain-text rendering; byte-stable for a given transcript.
inline std::string to_text(const Transcript& t) {
    std::ostringstream os;
    const auto& c = t.center;
    os << "case " << case_name(c.id) << ": " << c.description << "\n";
    os << "alpha:";
    if (c.id == CaseId::NG)
        os << " 1.." << c.alphas.size() << " (integral)";
    else
        for (const auto& a : c.alphas) os << " " << a;
    os << "\n";
    os << "equation: " << c.k << "*qhat = 13*s" << c.k << " + (13*beta" << c.k << " - " << c.k << "*alpha)*e\n";
    for (const auto& a : c.alphas) {
        if (c.id == CaseId::NG) break;
        os << "beta" << c.k << " class (alpha=" << a << "): " << beta_class(c, a, c.k) << " mod 1, minimum " << beta_min(c, a, c.k)
           << ", e <= " << e_bound(c, a) << "\n";
    }
    os << "bare solutions: " << t.bare.size() << "\n";
    for (const auto& b : t.bare) os << "  " << b.key() << (b.birational ? "" : " fiber-or-birational") << "\n";
    if (!t.filters_applied) return os.str();

    os << "filters:\n";
    for (const auto& f : t.filtered) {
        os << "  " << f.key() << "\n";
        os << "    " << splits_str(f) << "\n";
        if (f.target) os << "    target " << f.target->str() << " (" << f.target_reason << ")\n";
        if (f.verdict == Verdict::Eliminated)
            os << "    eliminated " << filter_code(f.filter) << " " << filter_title(f.filter) << ": " << f.reason << "\n";
        else
            os << "    passed\n";
        for (const auto& n : f.notes) os << "    note: " << n << "\n";
    }
    const auto fin = t.final_set();
    os << "final: " << (fin.empty() ? "none" : std::to_string(fin.size())) << "\n";
    for (const auto* f : fin) {
        os << "  (qhat=" << f->qhat << ", e=" << f->e << ", s" << f->k << "=" << f->s << ", beta" << f->k << "=" << f->beta << ")";
        if (f->target) os << " target " << f->target->str();
        os << "\n";
        std::string d;
        for (int v : f->d_values()) d += (d.empty() ? "" : ",") + std::to_string(v);
        os << "    d in {" << d << "}, |T| = d/e\n";
        os << "    canonical threshold ct(X,|6A|) = " << canonical_threshold(c, *f) << "\n";
        const auto in = second_contraction_input(*f);
        const auto sc = second_contraction(in);
        if (sc.min_delta) {
            const auto& sol = sc.solutions.front();
            os << "    second contraction: minimal delta=" << sol.delta << " b=" << sol.b;
            for (const auto& [k, g] : sol.gammas) os << " gamma" << k << "=" << g;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace qfano::sarkisov
