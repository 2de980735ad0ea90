#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcurv/einstein_model.hpp"
#include "qcurv/ratfunc.hpp"

namespace qcurv {

/// Eigen-action of the solution operator T_2N(lambda) on an eigenfunction
/// of the model, as a rational function of lambda.
struct FamilyAction {
    int N = 0;
    RatFunc action;
};

/// Eigen-action of the polynomial family P_2N(lambda) and the GJMS data it carries.
struct GjmsValue {
    int N = 0;
    Poly p_action;
    Rational gjms_at_spectral;       // p_action(n/2 - N)
    std::optional<Rational> q_value; // Q_2N for 2N < n
};

namespace detail {

/// (n/2 - lambda - 1) ... (n/2 - lambda - N).
inline Poly pole_product(int n, int N) {
    Poly p(1);
    for (int k = 1; k <= N; ++k) p *= Poly({Rational(n, 2) - Rational(k), Rational(-1)});
    return p;
}

inline Rational tp_normalization(int N) {
    return pow(Rational(2), 2 * N) * factorial_q(static_cast<std::size_t>(N));
}

} // namespace detail

/// Solves the eigen-equation recursion for T_0, ..., T_{2 N_max}:
///   sum_{j=0}^{N-1} 1/j! (Delta^(j) + (lambda + 2N - 2 - 2j) D^(j+1)) T_{2N-2-2j}
///     = -2N (2 lambda - n + 2N) T_{2N}.
/// Index 0 of the result is T_0 = 1.
inline std::vector<FamilyAction> solve_T_families(const EinsteinModel& m, const EigenParameter& e, int N_max) {
    if (N_max < 1 || N_max > m.half_n()) {
        throw Error(ErrorKind::InvalidOrder, "solve_T_families: N_max = " + std::to_string(N_max) +
                                                 " outside [1, n/2] for n = " + std::to_string(m.n()));
    }
    const auto order = static_cast<std::size_t>(N_max);
    const std::vector<Rational> D = logdet_series(m, order);
    const std::vector<Rational> lap = laplace_expansion(m, e, order);

    std::vector<FamilyAction> t;
    t.push_back({0, RatFunc(1)});
    for (int N = 1; N <= N_max; ++N) {
        RatFunc lhs;
        for (int j = 0; j < N; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            // Delta^(j) + (lambda + 2N - 2 - 2j) D^(j+1), divided by j!
            Poly weight = Poly(lap[ju]) + Poly::linear(Rational(2 * N - 2 - 2 * j)) * D[ju];
            weight = weight * (Rational(1) / factorial_q(ju));
            lhs += RatFunc(weight) * t[static_cast<std::size_t>(N - 1 - j)].action;
        }
        const Poly divisor = Poly({Rational(2 * N) * Rational(2 * N - m.n()), Rational(4 * N)});
        if (divisor.is_zero()) {
            throw Error(ErrorKind::SingularRecursion, "zero divisor at N = " + std::to_string(N));
        }
        t.push_back({N, -lhs / RatFunc(divisor)});
    }
    return t;
}

/// True when every pole of T_2N lies in {n/2 - 1, ..., n/2 - N} and is simple.
inline bool poles_contained(const FamilyAction& t, int n) {
    if (t.N == 0) return t.action.is_polynomial();
    return divmod(detail::pole_product(n, t.N), t.action.den()).remainder.is_zero();
}

/// P_2N(lambda) = 2^(2N) N! (n/2 - lambda - 1) ... (n/2 - lambda - N) T_2N(lambda).
inline Poly p_from_t(const FamilyAction& t, int n) {
    RatFunc p = RatFunc(detail::pole_product(n, t.N) * detail::tp_normalization(t.N)) * t.action;
    auto poly = p.as_poly();
    if (!poly) {
        throw Error(ErrorKind::NonPolynomialFamily, "P_" + std::to_string(2 * t.N) + " = " + p.to_string());
    }
    return *poly;
}

/// Solved T and P families for one (model, mu). Immutable after construction.
class SolvedFamilies {
public:
    SolvedFamilies(EinsteinModel m, EigenParameter e, int N_max)
        : model_(std::move(m)), eigen_(std::move(e)), t_(solve_T_families(model_, eigen_, N_max)) {
        p_.reserve(t_.size());
        for (const auto& t : t_) p_.push_back(p_from_t(t, model_.n()));
    }

    const EinsteinModel& model() const { return model_; }
    const EigenParameter& eigen() const { return eigen_; }
    int max_order() const { return static_cast<int>(t_.size()) - 1; }

    const FamilyAction& T(int N) const { return t_.at(static_cast<std::size_t>(N)); }
    const Poly& P(int N) const { return p_.at(static_cast<std::size_t>(N)); }

    /// Eigen-action of the GJMS operator P_2N = P_2N(n/2 - N).
    Rational gjms(int N) const { return P(N).eval(Rational(model_.half_n() - N)); }

private:
    EinsteinModel model_;
    EigenParameter eigen_;
    std::vector<FamilyAction> t_;
    std::vector<Poly> p_;
};

/// Q_2N from the constant term P_2N(1) = (-1)^N (n/2 - N) Q_2N, for 2N < n.
/// `at_zero` must be solved at mu = 0.
inline Rational q_from_gjms(const SolvedFamilies& at_zero, int N) {
    const int h = at_zero.model().half_n();
    if (2 * N >= at_zero.model().n()) {
        throw Error(ErrorKind::UnsupportedN, "Q_" + std::to_string(2 * N) + " is critical or beyond in n = " +
                                                 std::to_string(at_zero.model().n()));
    }
    return at_zero.gjms(N) / (sign_power(N) * Rational(h - N));
}

inline GjmsValue p_family(const EinsteinModel& m, const EigenParameter& e, int N) {
    if (N < 1 || 2 * N > m.n()) throw Error(ErrorKind::InvalidOrder, "p_family needs 1 <= N <= n/2");
    SolvedFamilies fam(m, e, N);
    GjmsValue g{N, fam.P(N), fam.gjms(N), std::nullopt};
    if (2 * N < m.n()) {
        if (e.mu.is_zero()) {
            g.q_value = q_from_gjms(fam, N);
        } else {
            g.q_value = q_from_gjms(SolvedFamilies(m, EigenParameter(), N), N);
        }
    }
    return g;
}

/// The explicit families P_2(lambda), P_4(lambda) and P_6(lambda) evaluated on
/// an eigenfunction of the model:
///   P_2 = Delta - lambda J
///   P_4 = (Delta - (lambda+2) J)(Delta - lambda J) + lambda(2 lambda - n + 2)|P|^2
///         + 2(2 lambda - n + 2) delta(P d) + (2 lambda - n + 2)(dJ, d)
///   P_6 = 4(n-4-2 lambda)(n-2-2 lambda)[lambda (log det)''' + Delta'']
///         + 4(n-4-2 lambda)[(lambda+2)(log det)'' + Delta'] P_2(lambda)
///         + (Delta - (lambda+4) J) P_4(lambda)
/// where ' is d/dt of g_t = (1 - c t)^2 g at t = 0.
inline Poly closed_form_p(const EinsteinModel& m, const EigenParameter& e, int N) {
    if (N < 1 || N > 3) throw Error(ErrorKind::UnsupportedN, "closed_form_p covers N = 1, 2, 3 only");
    const Rational& J = m.J();
    const Rational& mu = e.mu;
    const Rational n(m.n());
    const Poly lam = Poly::lambda();
    const Poly laplace(-mu);
    const Rational rho_sq = J * J / n;
    const Rational delta_rho_d = divergence_action(J / n, e);

    const Poly p2 = laplace - lam * J;
    if (N == 1) return p2;

    const Poly two_lam_shift = Rational(2) * lam + Poly(Rational(2) - n);  // 2 lambda - n + 2
    const Poly p4 = (laplace - (lam + Poly(2)) * J) * (laplace - lam * J) + lam * two_lam_shift * rho_sq +
                    Rational(2) * two_lam_shift * delta_rho_d;
    if (N == 2) return p4;

    const auto D = logdet_series(m, 3);
    const auto lap = laplace_expansion(m, e, 2);
    const Poly a = Poly(n - Rational(4)) - Rational(2) * lam;  // n - 4 - 2 lambda
    const Poly b = Poly(n - Rational(2)) - Rational(2) * lam;  // n - 2 - 2 lambda
    return Rational(4) * a * b * (lam * D[2] + Poly(lap[2])) +
           Rational(4) * a * ((lam + Poly(2)) * D[1] + Poly(lap[1])) * p2 +
           (laplace - (lam + Poly(4)) * J) * p4;
}

/// P_{n-2j}(N) - P_{2N-2j}(n-N) P_{n-2N}(N) on the eigenfunction, 0 <= j <= N <= n/2.
inline Rational check_factorization(const SolvedFamilies& fam, int N, int j) {
    const int h = fam.model().half_n();
    if (j < 0 || j > N || N > h) {
        throw Error(ErrorKind::InvalidOrder, "check_factorization needs 0 <= j <= N <= n/2");
    }
    if (fam.max_order() < h) throw Error(ErrorKind::InvalidOrder, "families must be solved up to n/2");
    const Rational lhs = fam.P(h - j).eval(Rational(N));
    const Rational rhs = fam.P(N - j).eval(Rational(fam.model().n() - N)) * fam.P(h - N).eval(Rational(N));
    return lhs - rhs;
}

inline Rational check_factorization(const EinsteinModel& m, const EigenParameter& e, int N, int j) {
    return check_factorization(SolvedFamilies(m, e, m.half_n()), N, j);
}

/// omega_0 = 1 and D^(1) omega_{2N-2} + ... + D^(N)/(N-1)! omega_0 = -4N omega_{2N}.
inline std::vector<Rational> omega_leading(const EinsteinModel& m, int N_max) {
    if (N_max < 0 || N_max > m.half_n()) throw Error(ErrorKind::InvalidOrder, "omega_leading needs N_max <= n/2");
    const auto D = logdet_series(m, static_cast<std::size_t>(std::max(N_max, 1)));
    std::vector<Rational> w{Rational(1)};
    for (int N = 1; N <= N_max; ++N) {
        Rational s;
        for (int k = 1; k <= N; ++k) {
            s += D[static_cast<std::size_t>(k - 1)] / factorial_q(static_cast<std::size_t>(k - 1)) *
                 w[static_cast<std::size_t>(N - k)];
        }
        w.push_back(-s / Rational(4 * N));
    }
    return w;
}

/// Leading lambda^N coefficient of (lambda - n/2 + 1) ... (lambda - n/2 + N) T_2N(lambda),
/// read off from P_2N: coefficient(P_2N, N) (-1)^N / (2^(2N) N!).
inline Rational leading_from_family(const SolvedFamilies& fam, int N) {
    return fam.P(N).coefficient(static_cast<std::size_t>(N)) * sign_power(N) / detail::tp_normalization(N);
}

} // namespace qcurv
