#pragma once

// Deterministic generators for property tests.

#include <random>
#include <vector>

#include "qcurv/poly.hpp"
#include "qcurv/rational.hpp"
#include "qcurv/series.hpp"

namespace qcurv::testing {

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int max_num = 30, int max_den = 12) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational nonzero_rational(int max_num = 30, int max_den = 12) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    Rational nonnegative_rational(int max_num = 30, int max_den = 12) {
        return Rational(integer(0, max_num), integer(1, max_den));
    }

    Poly poly(int max_degree) {
        std::vector<Rational> c;
        const int d = integer(0, max_degree);
        for (int i = 0; i <= d; ++i) c.push_back(rational());
        return Poly(c);
    }

    Poly nonzero_poly(int max_degree) {
        for (;;) {
            Poly p = poly(max_degree);
            if (!p.is_zero()) return p;
        }
    }

    /// Series with constant term one, as needed for sqrt.
    Series<Rational> unit_series(std::size_t order) {
        std::vector<Rational> c{Rational(1)};
        for (std::size_t i = 1; i <= order; ++i) c.push_back(rational());
        return Series<Rational>(c, order);
    }

    /// An even dimension n in [8, 14] and a nonzero J.
    int dimension() { return 2 * integer(4, 7); }

private:
    std::mt19937 rng_;
};

/// Binomial coefficient C(alpha, k) for rational alpha, computed as a falling product.
inline Rational general_binomial(const Rational& alpha, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * (alpha - Rational(i)) / Rational(i + 1);
    return r;
}

/// Independent oracle: on the model, GJMS operators are those of a rescaled round
/// sphere (or its hyperbolic analogue), so P_2N acts on a Laplace eigenfunction
/// with eigenvalue mu as (-1)^N prod_{j=1}^N (mu + (2J/n)(n/2 + j - 1)(n/2 - j)).
inline Rational sphere_gjms(int n, const Rational& J, const Rational& mu, int N) {
    const Rational scale = Rational(2) * J / Rational(n);
    Rational r = (N % 2 == 0) ? Rational(1) : Rational(-1);
    for (int j = 1; j <= N; ++j) r = r * (mu + scale * Rational((n / 2 + j - 1) * (n / 2 - j)));
    return r;
}

/// Q_2N = (-1)^N P_2N(1) / (n/2 - N) below the critical order, and the
/// sphere value (n-1)! (2J/n)^(n/2) at the critical order.
inline Rational sphere_q(int n, const Rational& J, int N) {
    const Rational scale = Rational(2) * J / Rational(n);
    if (2 * N == n) {
        Rational f(1);
        for (int k = 2; k < n; ++k) f = f * Rational(k);
        Rational s(1);
        for (int k = 0; k < N; ++k) s = s * scale;
        return f * s;
    }
    const Rational sign = (N % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * sphere_gjms(n, J, Rational(0), N) / Rational(n / 2 - N);
}

} // namespace qcurv::testing
