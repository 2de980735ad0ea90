#pragma once

#include <string>
#include <vector>

#include "qcurv/curvature.hpp"
#include "qcurv/series.hpp"

namespace qcurv {

/// Einstein conformal infinity in even dimension n >= 6 with constant
/// normalized scalar curvature J. The Poincare-Einstein expansion is the
/// exact square g_r = (1 - c r^2)^2 g with c = J/(2n), so every operator
/// below is a polynomial in the Laplacian of g.
class EinsteinModel {
public:
    EinsteinModel(int n, Rational J) : n_(n), J_(std::move(J)) {
        require_supported_dimension(n);
        c_ = J_ / Rational(2 * n);
    }

    int n() const { return n_; }
    int half_n() const { return n_ / 2; }
    const Rational& J() const { return J_; }
    const Rational& c() const { return c_; }

    ScalarCurvatureData curvature() const { return ScalarCurvatureData::einstein(n_, J_); }

    std::string label() const { return "(" + std::to_string(n_) + "," + J_.to_string() + ")"; }

    friend bool operator==(const EinsteinModel& a, const EinsteinModel& b) { return a.n_ == b.n_ && a.J_ == b.J_; }

private:
    int n_;
    Rational J_;
    Rational c_;
};

/// Laplace eigenvalue: Delta_g f = -mu f, mu >= 0.
struct EigenParameter {
    Rational mu;

    explicit EigenParameter(Rational value = Rational(0)) : mu(std::move(value)) {
        if (mu.sign() < 0) throw Error(ErrorKind::InvalidParameter, "eigen parameter mu must be >= 0, got " + mu.to_string());
    }
};

inline EinsteinModel make_model(int n, const Rational& J) { return EinsteinModel(n, J); }

/// v(r) = vol(g_r)/vol(g) = (1 - c t)^n; entry j is v_{2j}.
inline Series<Rational> volume_series(const EinsteinModel& m, std::size_t order) {
    if (order < 1) throw Error(ErrorKind::InvalidOrder, "volume_series needs order >= 1");
    Series<Rational> s(order);
    for (std::size_t j = 0; j <= order; ++j) {
        s[j] = binomial(m.n(), static_cast<long>(j)) * pow(-m.c(), static_cast<int>(j));
    }
    return s;
}

/// D^(k), k = 1..order, in log det g_r = D^(0) + sum_k t^k/k! D^(k);
/// here log det g_r = 2n log(1 - c t), so D^(k) = -2n (k-1)! c^k.
inline std::vector<Rational> logdet_series(const EinsteinModel& m, std::size_t order) {
    if (order < 1) throw Error(ErrorKind::InvalidOrder, "logdet_series needs order >= 1");
    std::vector<Rational> d;
    d.reserve(order);
    for (std::size_t k = 1; k <= order; ++k) {
        d.push_back(Rational(-2 * m.n()) * factorial_q(k - 1) * pow(m.c(), static_cast<int>(k)));
    }
    return d;
}

/// Eigen-actions of Delta^(k), k = 0..order, in Delta_{g_r} = sum_k t^k/k! Delta^(k).
/// Delta_{g_r} = (1 - c t)^(-2) Delta_g, so Delta^(k) acts as -k! (k+1) c^k mu.
inline std::vector<Rational> laplace_expansion(const EinsteinModel& m, const EigenParameter& e, std::size_t order) {
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        out.push_back(-factorial_q(k) * Rational(static_cast<long>(k + 1)) * pow(m.c(), static_cast<int>(k)) * e.mu);
    }
    return out;
}

/// Eigen-action of the divergence-form operator delta(s Id d): +s mu.
inline Rational divergence_action(const Rational& s, const EigenParameter& e) { return s * e.mu; }

} // namespace qcurv
