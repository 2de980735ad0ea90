#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "qcurv/poly.hpp"

namespace qcurv {

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleEvaluationError : public Error {
public:
    explicit PoleEvaluationError(Rational point)
        : Error(ErrorKind::PoleEvaluation, "evaluation at pole lambda = " + point.to_string()),
          point_(std::move(point)) {}

    const Rational& point() const noexcept { return point_; }

private:
    Rational point_;
};

/// Reduced quotient num/den of lambda-polynomials: gcd(num, den) = 1 and
/// den is monic. The zero function is 0/1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    RatFunc(Rational c) : RatFunc(Poly(std::move(c))) {}
    template <std::integral T>
    RatFunc(T c) : RatFunc(Poly(c)) {}

    static RatFunc normalize(Poly num, Poly den) {
        if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
        RatFunc r;
        if (num.is_zero()) return r;
        if (*den.degree() > 0) {
            Poly g = gcd(num, den);
            if (*g.degree() > 0) {
                num = divmod(num, g).quotient;
                den = divmod(den, g).quotient;
            }
        }
        Rational inv = Rational(1) / den.leading();
        r.num_ = num * inv;
        r.den_ = den * inv;
        return r;
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == Degree(0); }

    std::optional<Poly> as_poly() const {
        if (!is_polynomial()) return std::nullopt;
        return num_;
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw PoleEvaluationError(x);
        return num_.eval(x) / d;
    }

    /// f(lambda + a).
    RatFunc shifted(const Rational& a) const { return normalize(num_.shifted(a), den_.shifted(a)); }

    RatFunc inverse() const {
        if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of the zero rational function");
        return normalize(den_, num_);
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
        return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return normalize(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

private:
    Poly num_;
    Poly den_;
};

inline RatFunc ratfunc_normalize(Poly num, Poly den) { return RatFunc::normalize(std::move(num), std::move(den)); }
inline Rational ratfunc_eval(const RatFunc& f, const Rational& x) { return f.eval(x); }
inline Rational poly_coefficient(const Poly& p, std::size_t k) { return p.coefficient(k); }
inline Rational poly_derivative_at_zero(const Poly& p) { return p.derivative_at_zero(); }

} // namespace qcurv
