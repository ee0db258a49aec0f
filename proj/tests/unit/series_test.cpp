#include "geoint/geodesic.hpp"
#include "geoint/series.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace geoint {
namespace {

using testing::load_context;

class SeriesTest : public ::testing::TestWithParam<std::string> {
protected:
    SeriesTest() : ctx(load_context(GetParam())) {}
    FFormContext ctx;
};

TEST_P(SeriesTest, DegenerateArguments) {
    EXPECT_EQ(elliptic_coeff(0, ctx), 0);
    EXPECT_EQ(elliptic_coeff(-4, ctx), 0);
    EXPECT_EQ(elliptic_coeff(Rational(7, 2), ctx), 0);
    EXPECT_EQ(elliptic_coeff(Rational(6, 2), ctx), elliptic_coeff(3, ctx));
}

TEST_P(SeriesTest, ThetaIsSumOfVarsigma) {
    for (std::int64_t n = 1; n <= 10; ++n) {
        auto orbits = enumerate_orbits(n, ctx);
        std::int64_t s = 0;
        for (const auto& o : orbits) s += ctx.varsigma(o.b);
        EXPECT_EQ(theta_coeff(ctx, orbits), s);
        EXPECT_EQ(elliptic_coeff(n, ctx), s);
    }
}

TEST_P(SeriesTest, DiagonalRestriction) {
    const std::int64_t bound = 20;
    auto c = hilbert_coeffs(bound, ctx);
    std::vector<std::int64_t> by_trace(bound + 1, 0);
    const double sD = std::sqrt(static_cast<double>(ctx.D()));
    for (const auto& [beta, v] : c) {
        EXPECT_TRUE(totally_positive(beta));
        Rational tr = beta.trace();
        ASSERT_TRUE(is_integer(tr));
        std::int64_t n = tr.get_num().get_si();
        ASSERT_GE(n, 1);
        ASSERT_LE(n, bound);
        EXPECT_LT(std::fabs(beta.b().get_d()) * sD, n / 2.0);
        by_trace[static_cast<std::size_t>(n)] += v;
    }
    for (std::int64_t n = 1; n <= bound; ++n) EXPECT_EQ(by_trace[static_cast<std::size_t>(n)], elliptic_coeff(n, ctx));
}

TEST_P(SeriesTest, ReportMatchesAndIsDeterministic) {
    auto t = report(ctx, 20, Method::both, {}, 2);
    ASSERT_EQ(t.rows.size(), 20u);
    EXPECT_TRUE(t.all_match());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        EXPECT_EQ(r.n, static_cast<std::int64_t>(i + 1));
        ASSERT_TRUE(r.theta && r.oracle);
        EXPECT_EQ(*r.theta, t.calibration_sign * *r.oracle);
        EXPECT_EQ(r.coprime, std::gcd(r.n, ctx.level() * ctx.ramification().discriminant) == 1);
    }
    auto t1 = report(ctx, 20, Method::both, {}, 1);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_EQ(t1.rows[i].theta, t.rows[i].theta);
        EXPECT_EQ(t1.rows[i].oracle, t.rows[i].oracle);
    }
}

TEST_P(SeriesTest, SingleMethodLeavesOtherColumnEmpty) {
    auto t = report(ctx, 5, Method::theta);
    for (const auto& r : t.rows) {
        EXPECT_TRUE(r.theta.has_value());
        EXPECT_FALSE(r.oracle.has_value());
    }
    auto o = report(ctx, 5, Method::oracle);
    for (const auto& r : o.rows) {
        EXPECT_FALSE(r.theta.has_value());
        EXPECT_TRUE(r.oracle.has_value());
    }
    EXPECT_TRUE(report(ctx, 0).rows.empty());
}

TEST_P(SeriesTest, FlippedConventionNegatesThetaAndRecalibrates) {
    auto base = report(ctx, 15);
    auto flipped = report(ctx.with_sign_convention(-ctx.sign_convention()), 15);
    EXPECT_TRUE(flipped.all_match());
    bool any_nonzero = false;
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
        EXPECT_EQ(*flipped.rows[i].theta, -*base.rows[i].theta);
        EXPECT_EQ(*flipped.rows[i].oracle, *base.rows[i].oracle);
        any_nonzero = any_nonzero || *base.rows[i].theta != 0;
    }
    if (any_nonzero) EXPECT_EQ(flipped.calibration_sign, -base.calibration_sign);
}

INSTANTIATE_TEST_SUITE_P(Bundled, SeriesTest, ::testing::ValuesIn(testing::bundled_configs()));

TEST(Series, VanishingSeriesCalibratesToPlusOne) {
    auto ctx = load_context("disc6_maximal");
    auto t = report(ctx, 20);
    for (const auto& r : t.rows) {
        EXPECT_EQ(*r.theta, 0);
        EXPECT_EQ(*r.oracle, 0);
    }
    EXPECT_EQ(t.calibration_sign, 1);
}

TEST(Series, Level15FirstCoefficients) {
    // The newform of level 15 begins q - q^2 - q^3 - q^4 + q^5 + q^6 + 3 q^8.
    auto ctx = load_context("disc15_maximal");
    auto t = report(ctx, 8);
    const std::vector<std::int64_t> expected = {1, -1, -1, -1, 1, 1, 0, 3};
    std::int64_t a1 = *t.rows[0].theta;
    ASSERT_NE(a1, 0);
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(*t.rows[i].theta, a1 * expected[i]) << "n=" << i + 1;
}

}  // namespace
}  // namespace geoint
