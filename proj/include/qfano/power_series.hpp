#pragma once

#include "qfano/errors.hpp"
#include "qfano/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qfano {

/// Truncation order used when callers do not ask for one.
inline constexpr std::size_t kDefaultOrder = 30;

/// Formal power series truncated after t^order, exact rational coefficients.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back(0);
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& operator[](std::size_t m) const { return coeffs_[m]; }
    Rational& operator[](std::size_t m) { return coeffs_[m]; }

    /// Bounds-checked coefficient access.
    const Rational& at(std::size_t m) const {
        if (m > order())
            throw TruncationError("coefficient t^" + std::to_string(m) + " requested from series of order " +
                                  std::to_string(order()));
        return coeffs_[m];
    }

    std::span<const Rational> coefficients() const { return coeffs_; }

    PowerSeries truncated(std::size_t order) const {
        if (order > this->order()) throw TruncationError("cannot extend a truncated series");
        return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    bool is_integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
    }

    /// Coefficients as integers; throws if any is fractional.
    std::vector<std::int64_t> to_integers() const {
        std::vector<std::int64_t> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.to_int64());
        return out;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Rational function  prod(1 - t^a) / prod(1 - t^b); exponents form multisets.
struct ProductSpec {
    std::vector<int> numerator_exponents;
    std::vector<int> denominator_exponents;
};

inline PowerSeries expand_product(const ProductSpec& spec, std::size_t order) {
    PowerSeries s(order);
    s[0] = 1;
    auto check = [](int a) {
        if (a < 1) throw std::invalid_argument("expand_product: exponents must be >= 1");
        return static_cast<std::size_t>(a);
    };
    for (int a : spec.numerator_exponents) {
        const std::size_t step = check(a);
        for (std::size_t m = order + 1; m-- > step;) s[m] -= s[m - step];
    }
    for (int b : spec.denominator_exponents) {
        const std::size_t step = check(b);
        for (std::size_t m = step; m <= order; ++m) s[m] += s[m - step];
    }
    return s;
}

/*
 * Number of non-negative integer vectors a with sum a_i * parts_i == n.
 * Repeated entries in `parts` are distinct variables, so this equals the
 * number of monomials of degree n in a weighted polynomial ring.
 * Plain recursion on purpose: it serves as an oracle for expand_product.
 */
inline std::uint64_t partition_count(std::span<const int> parts, std::int64_t n) {
    if (n < 0) return 0;
    if (parts.empty()) return n == 0 ? 1 : 0;
    const int p = parts.front();
    if (p < 1) throw std::invalid_argument("partition_count: parts must be >= 1");
    std::uint64_t total = 0;
    for (std::int64_t rest = n; rest >= 0; rest -= p) total += partition_count(parts.subspan(1), rest);
    return total;
}

struct SeriesComparison {
    bool equal = true;
    std::optional<std::size_t> first_mismatch;
};

inline SeriesComparison series_equal_upto(const PowerSeries& a, const PowerSeries& b, std::size_t order) {
    if (order > a.order() || order > b.order())
        throw TruncationError("comparison order " + std::to_string(order) + " exceeds series order " +
                              std::to_string(std::min(a.order(), b.order())));
    for (std::size_t m = 0; m <= order; ++m)
        if (a[m] != b[m]) return {false, m};
    return {};
}

}  // namespace qfano
