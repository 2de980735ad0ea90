#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcurv/compositions.hpp"
#include "qcurv/families.hpp"
#include "qcurv/series.hpp"

namespace qcurv {

/// Everything about a model that does not depend on the eigenvalue: the
/// families on constants (mu = 0), v(r) and w(r) = sqrt(v(r)) up to r^n.
class ModelConstants {
public:
    explicit ModelConstants(const EinsteinModel& m)
        : families_(m, EigenParameter(), m.half_n()),
          v_(volume_series(m, static_cast<std::size_t>(m.half_n()))),
          w_(series_sqrt(v_)) {}

    const EinsteinModel& model() const { return families_.model(); }
    const SolvedFamilies& families() const { return families_; }
    int n() const { return model().n(); }
    int half_n() const { return model().half_n(); }

    /// v_{2j} and w_{2j}.
    const Rational& v(int j) const { return v_[static_cast<std::size_t>(j)]; }
    const Rational& w(int j) const { return w_[static_cast<std::size_t>(j)]; }
    const Series<Rational>& v_series() const { return v_; }
    const Series<Rational>& w_series() const { return w_; }

    /// P_2N(1) for the GJMS operator; P_0 = 1.
    Rational gjms(int N) const { return families_.gjms(N); }

    /// Q_2N through the constant term of P_2N, 2N < n.
    Rational q(int N) const { return q_from_gjms(families_, N); }

    /// P_{2I}(f) for a constant f: the operators act by their constant terms.
    Rational compose_on_constant(const Composition& I, const Rational& f) const {
        Rational r = f;
        for (int part : I.parts()) r *= gjms(part);
        return r;
    }

private:
    SolvedFamilies families_;
    Series<Rational> v_;
    Series<Rational> w_;
};

enum class QResRoute { Definition, Interpolation };

inline std::string to_string(QResRoute r) { return r == QResRoute::Definition ? "definition" : "interpolation"; }

struct QResPoly {
    int N = 0;
    int n = 0;
    Poly poly;
    QResRoute route = QResRoute::Definition;

    /// poly(lambda) / lambda; exact because poly(0) = 0.
    Poly reduced() const {
        auto [q, r] = divmod(poly, Poly::lambda());
        if (!r.is_zero()) {
            throw Error(ErrorKind::NonPolynomialResult,
                        "Q_" + std::to_string(2 * N) + "^res has nonzero constant term " + r.to_string());
        }
        return q;
    }
};

struct VPoly {
    int N = 0;
    int n = 0;
    Poly poly;
};

namespace detail {

inline void require_order(const ModelConstants& mc, int N, const char* what) {
    if (N < 1 || 2 * N > mc.n()) {
        throw Error(ErrorKind::UnsupportedDimension, std::string(what) + ": need 1 <= N <= n/2, got N = " +
                                                         std::to_string(N) + ", n = " + std::to_string(mc.n()));
    }
}

inline Poly clear_poles(const RatFunc& f, const char* what, int N) {
    auto p = f.as_poly();
    if (!p) {
        throw Error(ErrorKind::NonPolynomialResult,
                    std::string(what) + " for N = " + std::to_string(N) + " left " + f.to_string());
    }
    return *p;
}

} // namespace detail

/// Q_2N^res(lambda) = -2^(2N) N! (lambda + n/2 - 2N + 1) ... (lambda + n/2 - N)
///                    x sum_{j=0}^N T*_{2N-2j}(lambda + n - 2N)(v_2j),
/// with T* = T on the model, acting on constants.
inline QResPoly qres_definition(const ModelConstants& mc, int N) {
    detail::require_order(mc, N, "qres_definition");
    const auto& fam = mc.families();
    const Rational shift(mc.n() - 2 * N);
    RatFunc sum;
    for (int j = 0; j <= N; ++j) sum += fam.T(N - j).action.shifted(shift) * RatFunc(mc.v(j));
    const Poly prefactor = rising_linear_product(Rational(mc.half_n() - 2 * N), 1, N) *
                           (-detail::tp_normalization(N));
    return {N, mc.n(), detail::clear_poles(RatFunc(prefactor) * sum, "qres_definition", N), QResRoute::Definition};
}

inline QResPoly qres_definition(const EinsteinModel& m, int N) { return qres_definition(ModelConstants(m), N); }

/// Q_n from the linear coefficient of the critical Q-curvature polynomial.
inline Rational critical_q(const ModelConstants& mc) {
    return qres_definition(mc, mc.half_n()).poly.derivative_at_zero();
}

inline Rational critical_q(const EinsteinModel& m) { return critical_q(ModelConstants(m)); }

/// n (-1)^(n/2) Q_n = 2^(n-1) (n/2)! (n/2-1)! sum_{j<n/2} (n - 2j) T*_2j(0)(v_{n-2j}).
inline Rational holographic_sum(const ModelConstants& mc) {
    const int h = mc.half_n();
    Rational s;
    for (int j = 0; j < h; ++j) s += Rational(mc.n() - 2 * j) * mc.families().T(j).action.eval(Rational(0)) * mc.v(h - j);
    return pow(Rational(2), mc.n() - 1) * factorial_q(static_cast<std::size_t>(h)) *
           factorial_q(static_cast<std::size_t>(h - 1)) * s;
}

inline Rational holographic_q(const ModelConstants& mc) {
    return holographic_sum(mc) / (Rational(mc.n()) * sign_power(mc.half_n()));
}

inline Rational holographic_q(const EinsteinModel& m) { return holographic_q(ModelConstants(m)); }

/// Q_2N for any 2N <= n: constant term of P_2N below the critical order,
/// holographic formula at the critical order.
inline Rational q_curvature(const ModelConstants& mc, int N) {
    return 2 * N < mc.n() ? mc.q(N) : holographic_q(mc);
}

/// Lagrange form of the reduced polynomial Qt_2N = Q_2N^res / lambda through
/// the nodes lambda_j = -n/2 + 2N - j, j = 1..N:
///   Qt_2N(lambda_j) = (-1)^j P_2j(Qt_{2N-2j}(lambda_j))  for j < N,
///   Qt_2N(lambda_N) = Q_2N.
/// Lower orders are themselves taken from this route.
inline QResPoly qres_interpolation(const ModelConstants& mc, int N) {
    if (N < 1 || 2 * N > mc.n()) {
        throw Error(ErrorKind::UnsupportedN, "qres_interpolation: N = " + std::to_string(N) + " in n = " +
                                                 std::to_string(mc.n()));
    }
    const Rational base(2 * N - mc.half_n());  // lambda_j = base - j
    std::vector<Poly> lower;                    // lower[k] = Qt_2k, k < N
    lower.emplace_back();
    for (int k = 1; k < N; ++k) lower.push_back(qres_interpolation(mc, k).reduced());

    Poly reduced;
    for (int j = 1; j <= N; ++j) {
        const Rational node = base - Rational(j);
        Rational value = j == N ? q_curvature(mc, N) : sign_power(j) * mc.gjms(j) * lower[static_cast<std::size_t>(N - j)].eval(node);
        Poly basis(1);
        for (int k = 1; k <= N; ++k) {
            if (k == j) continue;
            basis *= (Poly::lambda() - Poly(base - Rational(k))) * (Rational(1) / Rational(k - j));
        }
        reduced += basis * value;
    }
    return {N, mc.n(), reduced * Poly::lambda(), QResRoute::Interpolation};
}

inline QResPoly qres_interpolation(const EinsteinModel& m, int N) { return qres_interpolation(ModelConstants(m), N); }

/// V_2N(lambda) = (lambda - n/2 + 1) ... (lambda - n/2 + N) sum_{j=0}^N (2N + 2j) T*_2j(lambda)(v_{2N-2j}).
inline VPoly v_polynomial(const ModelConstants& mc, int N) {
    detail::require_order(mc, N, "v_polynomial");
    RatFunc sum;
    for (int j = 0; j <= N; ++j) {
        sum += mc.families().T(j).action * RatFunc(Rational(2 * N + 2 * j) * mc.v(N - j));
    }
    const Poly prefactor = rising_linear_product(Rational(-mc.half_n()), 1, N);
    return {N, mc.n(), detail::clear_poles(RatFunc(prefactor) * sum, "v_polynomial", N)};
}

inline VPoly v_polynomial(const EinsteinModel& m, int N) { return v_polynomial(ModelConstants(m), N); }

/// One summand P_{2I}(Q_{2a}) of the recursive formula with its coefficient.
struct RecursiveTerm {
    Composition I;
    int a = 0;
    Rational coefficient;
    Rational value;  // coefficient * P_{2I}(Q_{2a})
};

struct RecursiveFormula {
    int N = 0;
    std::vector<RecursiveTerm> terms;
    Rational w_term;  // (-1)^N N! (N-1)! 2^(2N) w_2N
    Rational total;
};

/// Right-hand side of Q_2N = -sum_{I nonempty} (-1)^|I| m_{(I,a)} P_{2I}(Q_{2a}) + (-1)^N N!(N-1)! 2^(2N) w_2N
/// evaluated on the model with GJMS operators and lower Q-curvatures from the families.
inline RecursiveFormula recursive_formula(const ModelConstants& mc, int N) {
    detail::require_order(mc, N, "recursive_formula");
    const RecursionTable table = build_recursion_table(N);
    RecursiveFormula f;
    f.N = N;
    for (const auto& [key, coeff] : table.entries) {
        const auto& [I, a] = key;
        if (I.empty()) continue;
        const Rational solved = -coeff;
        f.terms.push_back({I, a, solved, solved * mc.compose_on_constant(I, mc.q(a))});
        f.total += f.terms.back().value;
    }
    f.w_term = table.rhs_scale * mc.w(N);
    f.total += f.w_term;
    return f;
}

} // namespace qcurv
