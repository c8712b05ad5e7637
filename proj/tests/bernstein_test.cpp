#include "qeuler/bernstein.hpp"

#include <gtest/gtest.h>

namespace qeuler {
namespace {

QRatFn q() { return QRatFn::q(); }
QRatFn one_plus_q() { return QRatFn(q_integer(2)); }

TEST(BernsteinPoly, Examples) {
    EXPECT_EQ(bernstein_poly(0, 1).poly, (QPoly{BigRat(1), BigRat(-1)}));
    EXPECT_EQ(bernstein_poly(1, 2).poly, (QPoly{BigRat(0), BigRat(2), BigRat(-2)}));
    EXPECT_EQ(bernstein_poly(0, 0).poly, QPoly::one());
    EXPECT_THROW(bernstein_poly(3, 2), std::invalid_argument);
}

TEST(BernsteinPoly, PartitionOfUnityAndSymmetry) {
    for (std::size_t n = 0; n <= 12; ++n) {
        QPoly sum;
        for (std::size_t k = 0; k <= n; ++k) {
            sum = sum + bernstein_poly(k, n).poly;
            // B_{k,n}(1 - x) = B_{n-k,n}(x)
            ASSERT_EQ(bernstein_poly(k, n).poly.compose_affine(BigRat(1), BigRat(-1)), bernstein_poly(n - k, n).poly);
        }
        ASSERT_EQ(sum, QPoly::one()) << n;
    }
}

TEST(BernsteinOperator, Examples) {
    const std::vector<BigRat> constant(5, make_rat(3, 7));
    EXPECT_EQ(bernstein_operator(constant, 4, make_rat(2, 9)), make_rat(3, 7));

    // f(t) = t at n = 3
    const std::vector<BigRat> t{BigRat(0), make_rat(1, 3), make_rat(2, 3), BigRat(1)};
    EXPECT_EQ(bernstein_operator(t, 3, make_rat(1, 2)), make_rat(1, 2));
    // f(t) = t^2 at n = 2: x^2 + x(1 - x)/2
    const std::vector<BigRat> t2{BigRat(0), make_rat(1, 4), BigRat(1)};
    EXPECT_EQ(bernstein_operator(t2, 2, make_rat(1, 2)), make_rat(3, 8));

    EXPECT_THROW(bernstein_operator(t2, 3, BigRat(0)), std::invalid_argument);
}

TEST(BernsteinMoment, HandComputedExamples) {
    // 1 - E~_1 = (1 + 2q)/(1 + q)
    EXPECT_EQ(bernstein_moment_lhs(0, 1), (QRatFn(1) + QRatFn(2) * q()) / one_plus_q());
    // 2 (E~_1 - E~_2) = -4q^2/(1 + q)^2
    const QRatFn m12 = QRatFn(-4) * q() * q() / (one_plus_q() * one_plus_q());
    EXPECT_EQ(bernstein_moment_lhs(1, 2), m12);
    EXPECT_EQ(bernstein_moment_rhs(1, 2, MomentForm::reduced), m12);
}

TEST(BernsteinMoment, FullFormAtKZero) {
    const auto e = q_euler_numbers(10);
    for (std::size_t n = 1; n <= 10; ++n) {
        EXPECT_EQ(bernstein_moment_rhs(0, n, MomentForm::full), QRatFn(1) + q() + q() * q() * subst_q_inverse(e[n]));
        EXPECT_EQ(bernstein_moment_rhs(0, n, MomentForm::full), bernstein_moment_lhs(0, n)) << n;
    }
}

TEST(BernsteinMoment, FullAndReducedAgreeAwayFromKZero) {
    // the 1 + q terms cancel in the alternating sum once k >= 1
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::size_t k = 1; k < n; ++k)
            ASSERT_EQ(bernstein_moment_rhs(k, n, MomentForm::full), bernstein_moment_rhs(k, n, MomentForm::reduced))
                << n << " " << k;
}

TEST(BernsteinMoment, ExpansionRequiresKBelowN) {
    EXPECT_THROW(bernstein_moment_rhs(3, 3, MomentForm::full), std::invalid_argument);
    EXPECT_THROW(bernstein_moment_rhs(4, 3, MomentForm::reduced), std::invalid_argument);
    EXPECT_THROW(bernstein_moment_lhs(4, 3), std::invalid_argument);
}

TEST(BernsteinMoment, DirectEqualsBinomialForm) {
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            ASSERT_EQ(bernstein_moment_direct(k, n), bernstein_moment_lhs(k, n)) << n << " " << k;
}

TEST(BernsteinMoment, MomentsSumToOne) {
    for (std::size_t n = 0; n <= 10; ++n) {
        QRatFn sum;
        for (std::size_t k = 0; k <= n; ++k) sum += bernstein_moment_lhs(k, n);
        ASSERT_EQ(sum, QRatFn(1)) << n;
    }
}

TEST(BernsteinVerification, MomentExpansionAndKZeroRemark) {
    const auto v = verify_theorem8(12);
    EXPECT_TRUE(v.all_as_expected());
    EXPECT_EQ(v.theorem.instances.size(), 66u);
    EXPECT_EQ(v.theorem.failed(), 0u);
    EXPECT_EQ(v.k0_remark.passed(), 0u);
    EXPECT_EQ(v.k0_remark.instances.size(), 12u);
    EXPECT_EQ(v.k0_full.failed(), 0u);

    const auto& first = v.k0_remark.instances.front();
    ASSERT_TRUE(first.witness.has_value());
    EXPECT_EQ(std::get<QRatFn>(first.witness->left), (QRatFn(1) + QRatFn(2) * q()) / one_plus_q());
    EXPECT_EQ(std::get<QRatFn>(first.witness->right), -q() * q() / one_plus_q());
}

// Valuations of I_N(B_{k,n}) minus the exact moment at p = 3, q = 4,
// computed independently with exact rational arithmetic in Python.
TEST(BernsteinPadic, DefectValuationsMatchOracle) {
    const auto qc = QChoice::one_plus(3, 1);
    const std::vector<std::tuple<std::size_t, std::size_t, std::vector<long>>> cases{
        {1, 0, {1, 2, 3, 4, 5}}, {1, 1, {1, 2, 3, 4, 5}}, {2, 0, {2, 5, 5, 6, 7}},
        {2, 1, {1, 2, 3, 4, 5}}, {3, 1, {4, 4, 5, 6, 7}}, {3, 3, {5, 4, 5, 6, 7}},
        {4, 2, {3, 5, 6, 7, 8}}, {4, 4, {1, 2, 3, 4, 5}},
    };
    for (const auto& [n, k, expected] : cases) {
        std::vector<long> got;
        for (long level = 1; level <= 5; ++level)
            got.push_back(bernstein_moment_padic_defect(k, n, qc, 12, level).valuation());
        EXPECT_EQ(got, expected) << n << " " << k;
    }
}

} // namespace
} // namespace qeuler
