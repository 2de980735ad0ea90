#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qcurv/rational.hpp"

namespace qcurv {

/// Degree of a polynomial. The zero polynomial has no degree (std::nullopt),
/// which stands for minus infinity and cannot take part in integer arithmetic.
using Degree = std::optional<std::size_t>;
inline constexpr Degree kMinusInfinity = std::nullopt;

/// Univariate polynomial in the spectral parameter lambda over Q.
/// Coefficient i belongs to lambda^i; there is never a trailing zero.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    template <std::integral T>
    Poly(T constant) : Poly(Rational(constant)) {}

    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    /// The polynomial `lambda`.
    static Poly lambda() { return Poly({Rational(0), Rational(1)}); }

    /// `lambda + shift`.
    static Poly linear(const Rational& shift) { return Poly({shift, Rational(1)}); }

    static Poly monomial(Rational c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    Degree degree() const {
        if (coeffs_.empty()) return kMinusInfinity;
        return coeffs_.size() - 1;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of lambda^k; zero beyond the degree.
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    const Rational& leading() const {
        static const Rational zero;
        return coeffs_.empty() ? zero : coeffs_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    /// p'(0), i.e. the lambda^1 coefficient.
    Rational derivative_at_zero() const { return coefficient(1); }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(d));
    }

    /// p(lambda + a).
    Poly shifted(const Rational& a) const {
        Poly acc;
        const Poly x = linear(a);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Poly(*it);
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return {};
        return *this * (Rational(1) / leading());
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Rational& s) { return a * Poly(s); }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * Poly(s); }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, highest power first, e.g. "-12*lambda^2 + 3/2*lambda - 1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c.is_zero()) continue;
            Rational mag = c.sign() < 0 ? -c : c;
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            bool unit = mag == Rational(1);
            if (k == 0 || !unit) out += mag.to_string();
            if (k > 0) {
                if (!unit) out += "*";
                out += "lambda";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by 0");
    const std::size_t db = *b.degree();
    std::vector<Rational> rem = a.coefficients();
    if (rem.size() <= db) return {Poly(), a};
    std::vector<Rational> quot(rem.size() - db);
    const Rational inv_lead = Rational(1) / b.leading();
    const auto& bc = b.coefficients();
    for (std::size_t k = rem.size(); k-- > db;) {
        Rational q = rem[k] * inv_lead;
        if (q.is_zero()) continue;
        quot[k - db] = q;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * bc[i];
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Product of the linear factors (lambda + offset + k) for k in [first, last].
inline Poly rising_linear_product(const Rational& offset, long first, long last) {
    Poly p(1);
    for (long k = first; k <= last; ++k) p *= Poly::linear(offset + Rational(k));
    return p;
}

} // namespace qcurv
