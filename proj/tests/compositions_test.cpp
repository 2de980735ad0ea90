#include <set>

#include <gtest/gtest.h>

#include "qcurv/compositions.hpp"

namespace qcurv {
namespace {

/// Oracle: compositions of N correspond to subsets of the N-1 cut points.
std::set<std::vector<int>> compositions_by_cuts(int N) {
    std::set<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (N - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < N - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.insert(parts);
    }
    return out;
}

/// Oracle: m_I written as one product over the parts, with every factor kept in
/// the rational it represents.
Rational multiplicity_oracle(const std::vector<int>& I) {
    int size = 0;
    for (int p : I) size += p;
    Rational m = (I.size() % 2 == 0) ? Rational(-1) : Rational(1);
    for (int k = 1; k <= size; ++k) m = m * Rational(k);
    for (int k = 1; k < size; ++k) m = m * Rational(k);
    for (int p : I) {
        for (int k = 1; k <= p; ++k) m = m / Rational(k);
        for (int k = 1; k < p; ++k) m = m / Rational(k);
    }
    for (std::size_t j = 0; j + 1 < I.size(); ++j) m = m / Rational(I[j] + I[j + 1]);
    return m;
}

TEST(Compositions, SmallCases) {
    const auto one = enumerate_compositions(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].to_string(), "(1)");
    const auto three = enumerate_compositions(3);
    std::vector<std::string> names;
    for (const auto& c : three) names.push_back(c.to_string());
    EXPECT_EQ(names, (std::vector<std::string>{"(1,1,1)", "(1,2)", "(2,1)", "(3)"}));
    EXPECT_EQ(enumerate_compositions(4).size(), 8u);
}

TEST(Compositions, InvalidN) {
    try {
        enumerate_compositions(0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidN);
    }
    EXPECT_THROW(build_recursion_table(0), Error);
}

TEST(Compositions, EnumerationMatchesCutPointOracle) {
    for (int N = 1; N <= 12; ++N) {
        const auto comps = enumerate_compositions(N);
        EXPECT_EQ(comps.size(), std::size_t{1} << (N - 1));
        std::set<std::vector<int>> seen;
        for (const auto& c : comps) {
            EXPECT_EQ(c.size(), N);
            for (int p : c.parts()) EXPECT_GE(p, 1);
            seen.insert(c.parts());
        }
        EXPECT_EQ(seen, compositions_by_cuts(N));
        EXPECT_TRUE(std::is_sorted(comps.begin(), comps.end()));
    }
}

TEST(Multiplicity, DisplayedValues) {
    EXPECT_EQ(multiplicity(Composition({4})), Rational(1));
    EXPECT_EQ(multiplicity(Composition({1, 3})), Rational(-3));
    EXPECT_EQ(multiplicity(Composition({1, 1, 1, 1})), Rational(-18));
}

TEST(Multiplicity, SingletonsAreOne) {
    for (int N = 1; N <= 12; ++N) EXPECT_EQ(multiplicity(Composition({N})), Rational(1)) << N;
}

TEST(Multiplicity, AgreesWithProductOracle) {
    for (int N = 1; N <= 9; ++N) {
        for (const auto& c : enumerate_compositions(N)) EXPECT_EQ(multiplicity(c), multiplicity_oracle(c.parts())) << c.to_string();
    }
}

TEST(Multiplicity, SummationFormula) {
    EXPECT_EQ(multiplicity_sum(1), Rational(1));
    EXPECT_EQ(multiplicity(Composition({2})) + multiplicity(Composition({1, 1})), Rational(0));
    for (int N = 2; N <= 8; ++N) EXPECT_EQ(multiplicity_sum(N), Rational(0)) << N;
}

TEST(RecursionTable, OrderFourCoefficients) {
    const auto t = build_recursion_table(4);
    EXPECT_EQ(t.entries.size(), 8u);
    EXPECT_EQ(t.coefficient(Composition(), 4), Rational(1));
    EXPECT_EQ(t.rhs_scale, Rational(36864));
    EXPECT_EQ(t.solved_coefficient(Composition({1}), 3), Rational(-3));
    EXPECT_EQ(t.solved_coefficient(Composition({3}), 1), Rational(-3));
    EXPECT_EQ(t.solved_coefficient(Composition({2}), 2), Rational(9));
    EXPECT_EQ(t.solved_coefficient(Composition({1, 2}), 1), Rational(8));
    EXPECT_EQ(t.solved_coefficient(Composition({1, 1}), 2), Rational(-12));
    EXPECT_EQ(t.solved_coefficient(Composition({2, 1}), 1), Rational(12));
    EXPECT_EQ(t.solved_coefficient(Composition({1, 1, 1}), 1), Rational(-18));
}

TEST(RecursionTable, OrdersTwoAndThree) {
    const auto t2 = build_recursion_table(2);
    EXPECT_EQ(t2.coefficient(Composition(), 2), Rational(1));
    EXPECT_EQ(t2.coefficient(Composition({1}), 1), Rational(1));
    EXPECT_EQ(t2.rhs_scale, Rational(32));
    const auto t3 = build_recursion_table(3);
    EXPECT_EQ(t3.coefficient(Composition(), 3), Rational(1));
    EXPECT_EQ(t3.solved_coefficient(Composition({1}), 2), Rational(-2));
    EXPECT_EQ(t3.solved_coefficient(Composition({2}), 1), Rational(2));
    EXPECT_EQ(t3.solved_coefficient(Composition({1, 1}), 1), Rational(-3));
    EXPECT_EQ(t3.rhs_scale, Rational(-768));
}

TEST(RecursionTable, LeadingEntryIsOneForEveryOrder) {
    for (int N = 1; N <= 10; ++N) {
        const auto t = build_recursion_table(N);
        EXPECT_EQ(t.coefficient(Composition(), N), Rational(1)) << N;
        EXPECT_EQ(t.entries.size(), std::size_t{1} << (N - 1));
    }
}

} // namespace
} // namespace qcurv
