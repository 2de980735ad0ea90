#pragma once

#include <string>
#include <vector>

#include "qcurv/rational.hpp"

namespace qcurv {

/// Scalar contractions of the curvature that the low-order formulas consume.
/// No tensors are stored.
struct ScalarCurvatureData {
    int n = 0;
    Rational J;             // scal / (2(n-1))
    Rational rho_norm_sq;   // |P|^2 of the Schouten tensor
    Rational tr_rho3;       // tr(P^3)
    Rational bach_dot_rho;  // (B, P)

    /// Einstein data: P = (J/n) g, B = 0.
    static ScalarCurvatureData einstein(int n, const Rational& J) {
        const Rational s = J / Rational(n);
        return {n, J, Rational(n) * s * s, Rational(n) * s * s * s, Rational(0)};
    }
};

/// Eigenvalues of a symmetric endomorphism (standing in for the Schouten tensor).
struct SymSpectrum {
    std::vector<Rational> eigenvalues;

    static SymSpectrum constant(int n, const Rational& value) {
        return {std::vector<Rational>(static_cast<std::size_t>(n), value)};
    }

    Rational power_sum(int k) const {
        Rational s;
        for (const auto& x : eigenvalues) s += pow(x, k);
        return s;
    }
};

/// tr(wedge^3 P) = e_3 of the spectrum, cross-checked against Newton's
/// identity 6 e_3 = p_1^3 - 3 p_1 p_2 + 2 p_3.
inline Rational newton_wedge3(const SymSpectrum& s) {
    // e_k by the usual one-pass recurrence over the eigenvalues.
    Rational e1, e2, e3;
    for (const auto& x : s.eigenvalues) {
        e3 += e2 * x;
        e2 += e1 * x;
        e1 += x;
    }
    const Rational p1 = s.power_sum(1), p2 = s.power_sum(2), p3 = s.power_sum(3);
    const Rational newton = (p1 * p1 * p1 - Rational(3) * p1 * p2 + Rational(2) * p3) / Rational(6);
    if (newton != e3) {
        throw Error(ErrorKind::IdentityViolation,
                    "Newton identity mismatch: e3 = " + e3.to_string() + ", power sums give " + newton.to_string());
    }
    return e3;
}

struct VCoefficients {
    Rational v2, v4, v6;
};

inline void require_supported_dimension(int n) {
    if (n < 6 || n % 2 != 0) {
        throw Error(ErrorKind::UnsupportedDimension, "dimension n = " + std::to_string(n) + " (need even n >= 6)");
    }
}

/// v_2 = -J/2, v_4 = (J^2 - |P|^2)/8, 8 v_6 = -tr(wedge^3 P) - (B,P)/(3(n-4)),
/// with tr(wedge^3 P) = (J^3 - 3 J |P|^2 + 2 tr P^3)/6.
inline VCoefficients v_coefficients(const ScalarCurvatureData& d) {
    require_supported_dimension(d.n);
    const Rational& J = d.J;
    const Rational wedge3 = (J * J * J - Rational(3) * J * d.rho_norm_sq + Rational(2) * d.tr_rho3) / Rational(6);
    return {
        -J / Rational(2),
        (J * J - d.rho_norm_sq) / Rational(8),
        (-wedge3 - d.bach_dot_rho / Rational(3 * (d.n - 4))) / Rational(8),
    };
}

/// Q_4 = (n/2) J^2 - 2|P|^2 - Delta J.
inline Rational q4_closed_form(const ScalarCurvatureData& d, const Rational& laplace_J) {
    return Rational(d.n, 2) * d.J * d.J - Rational(2) * d.rho_norm_sq - laplace_J;
}

} // namespace qcurv
