#include <gtest/gtest.h>

#include "qcurv/curvature.hpp"
#include "support/generators.hpp"

namespace qcurv {
namespace {

using testing::Gen;

Rational brute_e3(const std::vector<Rational>& x) {
    Rational s;
    for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = a + 1; b < x.size(); ++b) {
            for (std::size_t c = b + 1; c < x.size(); ++c) s += x[a] * x[b] * x[c];
        }
    }
    return s;
}

TEST(Newton, DisplayedSpectra) {
    EXPECT_EQ(newton_wedge3(SymSpectrum::constant(8, Rational(1, 2))), Rational(7));
    EXPECT_EQ(newton_wedge3(SymSpectrum{{Rational(1), Rational(-1)}}), Rational(0));
    EXPECT_EQ(newton_wedge3(SymSpectrum{{Rational(1), Rational(2), Rational(3)}}), Rational(6));
}

TEST(Newton, RandomSpectraAgreeWithTripleSum) {
    Gen g(21);
    for (int i = 0; i < 50; ++i) {
        SymSpectrum s;
        const int k = g.integer(1, 9);
        for (int j = 0; j < k; ++j) s.eigenvalues.push_back(g.rational());
        EXPECT_EQ(newton_wedge3(s), brute_e3(s.eigenvalues));
    }
}

TEST(VCoefficients, FlatData) {
    const ScalarCurvatureData flat{8, Rational(0), Rational(0), Rational(0), Rational(0)};
    const auto v = v_coefficients(flat);
    EXPECT_EQ(v.v2, Rational(0));
    EXPECT_EQ(v.v4, Rational(0));
    EXPECT_EQ(v.v6, Rational(0));
}

// Oracle: on the Einstein class v(r) = (1 - J t/(2n))^n, so v_2j = C(n,j)(-J/(2n))^j.
TEST(VCoefficients, EinsteinDataMatchesBinomials) {
    Gen g(22);
    for (int i = 0; i < 20; ++i) {
        const int n = 2 * g.integer(3, 8);
        const Rational J = g.rational();
        const auto v = v_coefficients(ScalarCurvatureData::einstein(n, J));
        const Rational c = -J / Rational(2 * n);
        EXPECT_EQ(v.v2, binomial(n, 1) * c);
        EXPECT_EQ(v.v4, binomial(n, 2) * c * c);
        EXPECT_EQ(v.v6, binomial(n, 3) * c * c * c);
    }
}

TEST(VCoefficients, UnsupportedDimensions) {
    for (int n : {3, 4, 5, 7}) {
        try {
            v_coefficients(ScalarCurvatureData::einstein(n, Rational(1)));
            ADD_FAILURE() << n;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
        }
    }
}

TEST(EinsteinScalars, SchoutenInvariants) {
    const auto d = ScalarCurvatureData::einstein(8, Rational(4));
    EXPECT_EQ(d.rho_norm_sq, Rational(2));
    EXPECT_EQ(d.tr_rho3, Rational(1));
    EXPECT_EQ(d.bach_dot_rho, Rational(0));
}

TEST(Q4ClosedForm, ModelValues) {
    EXPECT_EQ(q4_closed_form(ScalarCurvatureData::einstein(8, Rational(4)), Rational(0)), Rational(60));
    EXPECT_EQ(q4_closed_form(ScalarCurvatureData::einstein(6, Rational(3)), Rational(0)), Rational(24));
    EXPECT_EQ(q4_closed_form(ScalarCurvatureData{8, 0, 0, 0, 0}, Rational(0)), Rational(0));
}

} // namespace
} // namespace qcurv
