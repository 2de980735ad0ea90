#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcurv/ratfunc.hpp"

namespace qcurv {

/// Ring operations a series coefficient type has to provide.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_unit(const Rational& x) { return !x.is_zero(); }
    static Rational inverse(const Rational& x) { return Rational(1) / x; }
};

template <>
struct RingTraits<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static bool is_unit(const RatFunc& x) { return !x.is_zero(); }
    static RatFunc inverse(const RatFunc& x) { return x.inverse(); }
};

template <class R>
concept SeriesRing = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { RingTraits<R>::zero() } -> std::convertible_to<R>;
    { RingTraits<R>::one() } -> std::convertible_to<R>;
    { RingTraits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { RingTraits<R>::inverse(a) } -> std::convertible_to<R>;
};

/// Power series in t = r^2 truncated after t^order. Index j holds the
/// coefficient of t^j, i.e. of r^(2j).
template <SeriesRing R>
class Series {
    using Traits = RingTraits<R>;

public:
    explicit Series(std::size_t order) : coeffs_(order + 1, Traits::zero()) {}

    /// Pads with zeros or drops terms beyond `order`.
    Series(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Traits::zero());
    }

    static Series one(std::size_t order) {
        Series s(order);
        s.coeffs_[0] = Traits::one();
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<R>& coefficients() const { return coeffs_; }
    const R& operator[](std::size_t j) const { return coeffs_.at(j); }
    R& operator[](std::size_t j) { return coeffs_.at(j); }

    friend Series operator+(Series a, const Series& b) {
        check_orders(a, b);
        for (std::size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
        return a;
    }
    friend Series operator-(Series a, const Series& b) {
        check_orders(a, b);
        for (std::size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
        return a;
    }

    /// Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b) {
        check_orders(a, b);
        Series r(a.order());
        for (std::size_t k = 0; k <= a.order(); ++k) {
            R acc = Traits::zero();
            for (std::size_t i = 0; i <= k; ++i) acc = acc + a.coeffs_[i] * b.coeffs_[k - i];
            r.coeffs_[k] = acc;
        }
        return r;
    }

    Series scaled(const R& s) const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

    /// d/dt; the result has order one less (order 0 gives the zero series of order 0).
    Series derivative() const {
        if (order() == 0) return Series(0);
        Series d(order() - 1);
        for (std::size_t j = 1; j <= order(); ++j) d.coeffs_[j - 1] = coeffs_[j] * R(static_cast<long>(j));
        return d;
    }

    Series truncated(std::size_t order) const { return Series(coeffs_, order); }

private:
    static void check_orders(const Series& a, const Series& b) {
        if (a.order() != b.order()) {
            throw Error(ErrorKind::OrderMismatch, "series orders " + std::to_string(a.order()) + " and " +
                                                      std::to_string(b.order()));
        }
    }

    std::vector<R> coeffs_;
};

template <SeriesRing R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
    return a * b;
}

/// Multiplicative inverse, solved coefficient by coefficient.
template <SeriesRing R>
Series<R> series_inv(const Series<R>& a) {
    using T = RingTraits<R>;
    if (!T::is_unit(a[0])) throw Error(ErrorKind::NonUnitConstantTerm, "series_inv: constant term not invertible");
    const R inv0 = T::inverse(a[0]);
    Series<R> r(a.order());
    r[0] = inv0;
    for (std::size_t k = 1; k <= a.order(); ++k) {
        R acc = T::zero();
        for (std::size_t i = 1; i <= k; ++i) acc = acc + a[i] * r[k - i];
        r[k] = -(acc * inv0);
    }
    return r;
}

/// Square root with constant term 1, from squaring: 2 w_k = a_k - sum_{0<i<k} w_i w_{k-i}.
template <SeriesRing R>
Series<R> series_sqrt(const Series<R>& a) {
    using T = RingTraits<R>;
    if (!(a[0] == T::one())) throw Error(ErrorKind::ConstantTermNotOne, "series_sqrt: constant term must be 1");
    const R half = T::inverse(R(2));
    Series<R> w(a.order());
    w[0] = T::one();
    for (std::size_t k = 1; k <= a.order(); ++k) {
        R acc = a[k];
        for (std::size_t i = 1; i < k; ++i) acc = acc - w[i] * w[k - i];
        w[k] = acc * half;
    }
    return w;
}

/// a'/a with ' = d/dt. The derivative loses one order, so the result has
/// order a.order() - 1.
template <SeriesRing R>
Series<R> log_derivative(const Series<R>& a) {
    if (a.order() == 0) throw Error(ErrorKind::InvalidOrder, "log_derivative needs order >= 1");
    if (!RingTraits<R>::is_unit(a[0])) {
        throw Error(ErrorKind::NonUnitConstantTerm, "log_derivative: constant term not invertible");
    }
    return a.derivative() * series_inv(a.truncated(a.order() - 1));
}

/// Holographic coefficients v_0..v_2N together with the coefficients of sqrt(v).
struct HolographicCoefficients {
    std::optional<int> n;
    std::vector<Rational> v;
    std::vector<Rational> w;
};

namespace detail {

/// The closed forms for 2 w_2, ..., 2 w_8 in terms of v_2, ..., v_8.
inline std::vector<Rational> sroot_closed_forms(const std::vector<Rational>& v) {
    auto at = [&](std::size_t j) { return j < v.size() ? v[j] : Rational(0); };
    const Rational v2 = at(1), v4 = at(2), v6 = at(3), v8 = at(4);
    return {
        v2,
        Rational(1, 4) * (Rational(4) * v4 - v2 * v2),
        Rational(1, 8) * (Rational(8) * v6 - Rational(4) * v4 * v2 + v2 * v2 * v2),
        Rational(1, 64) * (Rational(64) * v8 - Rational(32) * v6 * v2 - Rational(16) * v4 * v4 +
                           Rational(24) * v2 * v2 * v4 - Rational(5) * v2 * v2 * v2 * v2),
    };
}

} // namespace detail

/// Computes w = sqrt(v) and cross-checks the four closed forms of 2 w_{2j}
/// (j = 1..4) that are within the truncation order.
inline HolographicCoefficients half_power_check(const std::vector<Rational>& v, std::optional<int> n = std::nullopt) {
    if (v.empty() || v[0] != Rational(1)) throw Error(ErrorKind::ConstantTermNotOne, "half_power_check: v_0 must be 1");
    const std::size_t order = v.size() - 1;
    Series<Rational> w = series_sqrt(Series<Rational>(v, order));
    const auto closed = detail::sroot_closed_forms(v);
    for (std::size_t j = 1; j <= order && j <= closed.size(); ++j) {
        if (Rational(2) * w[j] != closed[j - 1]) {
            throw Error(ErrorKind::SquareRootViolation, "2 w_" + std::to_string(2 * j) + " = " +
                                                            (Rational(2) * w[j]).to_string() + " but closed form gives " +
                                                            closed[j - 1].to_string());
        }
    }
    return {n, v, w.coefficients()};
}

} // namespace qcurv
