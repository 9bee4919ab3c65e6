#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qfano {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Exact rational number, always in lowest terms with a positive denominator.
 * The backing store is boost's cpp_rational, which normalises on every
 * operation; this wrapper fixes the surface the rest of the library uses.
 */
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(std::int64_t v) : v_(v) {}        // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : v_(v) {}       // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }
    Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "p" or "p/q" with optional leading sign; no whitespace.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("Rational: empty integer");
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) throw std::invalid_argument("Rational: bare sign");
            for (std::size_t j = i; j < s.size(); ++j)
                if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("Rational: bad digit in '" + std::string(s) + "'");
            BigInt r(std::string(s.substr(i)));
            return s[0] == '-' ? BigInt(-r) : r;
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    /// Checked conversion; throws when not an integer or out of range.
    std::int64_t to_int64() const {
        if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
        BigInt n = numerator();
        if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("Rational: integer out of range");
        return n.convert_to<std::int64_t>();
    }

    /// Largest integer not exceeding the value.
    BigInt floor() const {
        BigInt n = numerator(), d = denominator();
        BigInt q = n / d;  // truncates toward zero
        if (n < 0 && q * d != n) q -= 1;
        return q;
    }
    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    boost::multiprecision::cpp_rational v_{0};
};

inline Rational pow(Rational base, unsigned exp) {
    Rational r(1);
    while (exp) {
        if (exp & 1U) r *= base;
        base *= base;
        exp >>= 1U;
    }
    return r;
}

}  // namespace qfano
