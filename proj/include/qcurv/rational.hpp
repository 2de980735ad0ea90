#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qcurv/error.hpp"

namespace qcurv {

/// Exact rational number in canonical form: the denominator is positive
/// and coprime to the numerator. Backed by GMP's mpq_class, which keeps
/// the canonical form after every arithmetic operation.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(mpz_class(static_cast<long>(value))) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) {
            throw Error(ErrorKind::ZeroDenominator, "rational with denominator 0");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Accepts "p" or "p/q" with optional leading '-' on p; no decimals,
    /// no whitespace, q > 0 after canonicalization.
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char ch : s) {
                if (ch < '0' || ch > '9') return false;
            }
            return true;
        };
        auto bad = [&] {
            return Error(ErrorKind::ParseError,
                         "not an exact rational (expected p or p/q): '" + std::string(text) + "'");
        };
        std::string_view num = text;
        std::string_view den;
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
            if (!digits(den)) throw bad();
        }
        std::string_view mag = num;
        if (!mag.empty() && (mag.front() == '-' || mag.front() == '+')) mag.remove_prefix(1);
        if (!digits(mag)) throw bad();
        mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
        mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
        return Rational(n, d);
    }

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by rational 0");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class value_{0};
};

inline Rational pow(const Rational& base, int exponent) {
    Rational b = exponent < 0 ? Rational(1) / base : base;
    unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    Rational result(1);
    while (e) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

/// Exact k! for small k, memoized.
inline const mpz_class& factorial(std::size_t k) {
    static const auto table = [] {
        constexpr std::size_t kMax = 40;
        std::vector<mpz_class> t(kMax + 1);
        t[0] = 1;
        for (std::size_t i = 1; i <= kMax; ++i) t[i] = t[i - 1] * static_cast<unsigned long>(i);
        return t;
    }();
    if (k >= table.size()) {
        throw Error(ErrorKind::InvalidN, "factorial argument " + std::to_string(k) + " out of table range");
    }
    return table[k];
}

inline Rational factorial_q(std::size_t k) { return Rational(factorial(k), mpz_class(1)); }

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace qcurv
