#include <gtest/gtest.h>

#include "qcurv/einstein_model.hpp"
#include "support/generators.hpp"

namespace qcurv {
namespace {

using testing::Gen;
using testing::general_binomial;

TEST(Model, Normalization) {
    EXPECT_EQ(make_model(8, Rational(4)).c(), Rational(1, 4));
    EXPECT_EQ(make_model(10, Rational(5)).c(), Rational(1, 4));
    EXPECT_EQ(make_model(8, Rational(0)).c(), Rational(0));
    EXPECT_EQ(make_model(12, Rational(3, 2)).label(), "(12,3/2)");
}

TEST(Model, RejectsUnsupportedDimensions) {
    for (int n : {-2, 0, 4, 7, 9}) EXPECT_THROW(make_model(n, Rational(1)), Error) << n;
}

TEST(Model, NegativeEigenParameterRejected) {
    try {
        EigenParameter(Rational(-1, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
    }
}

TEST(VolumeSeries, ModelValues) {
    const auto v = volume_series(make_model(8, Rational(4)), 4);
    EXPECT_EQ(v.coefficients(), (std::vector<Rational>{1, -2, Rational(7, 4), Rational(-7, 8), Rational(35, 128)}));
    const auto flat = volume_series(make_model(8, Rational(0)), 4);
    EXPECT_EQ(flat.coefficients(), (std::vector<Rational>{1, 0, 0, 0, 0}));
}

TEST(VolumeSeries, BinomialOracle) {
    Gen g(31);
    for (int i = 0; i < 20; ++i) {
        const auto m = make_model(g.dimension(), g.rational());
        const auto v = volume_series(m, 8);
        for (int j = 0; j <= 8; ++j) EXPECT_EQ(v[static_cast<std::size_t>(j)], general_binomial(Rational(m.n()), j) * pow(-m.c(), j));
    }
}

TEST(LogdetSeries, ModelValues) {
    const auto D = logdet_series(make_model(8, Rational(4)), 3);
    EXPECT_EQ(D, (std::vector<Rational>{-4, -1, Rational(-1, 2)}));
    Gen g(32);
    for (int i = 0; i < 20; ++i) {
        const auto m = make_model(g.dimension(), g.rational());
        const auto d = m.curvature();
        const auto DD = logdet_series(m, 3);
        EXPECT_EQ(DD[1], -Rational(1, 2) * d.rho_norm_sq);
        EXPECT_EQ(DD[2], -m.J() * m.J() * m.J() / Rational(2 * m.n() * m.n()));
        EXPECT_EQ(DD[2], -Rational(1, 2) * d.tr_rho3);
    }
}

// Oracle: Delta_{g_r} = (1 - c t)^(-2) Delta_g, expanded with the binomial series,
// acting on an eigenfunction with Delta_g f = -mu f.
TEST(LaplaceExpansion, MatchesBinomialSeries) {
    const auto m = make_model(8, Rational(4));
    const auto lap = laplace_expansion(m, EigenParameter(Rational(1)), 2);
    EXPECT_EQ(lap, (std::vector<Rational>{-1, Rational(-1, 2), Rational(-3, 8)}));
    EXPECT_EQ(laplace_expansion(m, EigenParameter(), 3), (std::vector<Rational>(4, Rational(0))));
    const auto flat = laplace_expansion(make_model(8, Rational(0)), EigenParameter(Rational(5)), 3);
    for (std::size_t k = 1; k < flat.size(); ++k) EXPECT_EQ(flat[k], Rational(0));

    Gen g(33);
    for (int i = 0; i < 20; ++i) {
        const auto mm = make_model(g.dimension(), g.rational());
        const Rational mu = g.nonnegative_rational();
        const auto l = laplace_expansion(mm, EigenParameter(mu), 5);
        for (int k = 0; k <= 5; ++k) {
            const Rational series_coeff = general_binomial(Rational(-2), k) * pow(-mm.c(), k);
            EXPECT_EQ(l[static_cast<std::size_t>(k)], factorial_q(static_cast<std::size_t>(k)) * series_coeff * (-mu));
        }
        EXPECT_EQ(l[1], Rational(2) * mm.c() * (-mu));
        EXPECT_EQ(l[2], Rational(6) * mm.c() * mm.c() * (-mu));
    }
}

TEST(DivergenceAction, ScalarMultipleOfEigenvalue) {
    EXPECT_EQ(divergence_action(Rational(1, 2), EigenParameter(Rational(3))), Rational(3, 2));
    EXPECT_EQ(divergence_action(Rational(7), EigenParameter()), Rational(0));
}

} // namespace
} // namespace qcurv
