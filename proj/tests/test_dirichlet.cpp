#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Zeta, KnownValues) {
    const double pi = std::numbers::pi;
    EXPECT_NEAR(std::abs(zeta(2.0) - pi * pi / 6), 0.0, 1e-5);
    EXPECT_NEAR(std::abs(zeta(4.0) - std::pow(pi, 4) / 90), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(zeta2(4.0) - std::pow(pi, 4) / 96), 0.0, 1e-12);
    EXPECT_THROW(zeta(1.0), std::domain_error);
}

TEST(Lambda, Validation) {
    EXPECT_THROW(Lambda(1.0, 1.0, 1.0), std::domain_error);
    Lambda l = Lambda::from_two(2.0, 0.0);
    EXPECT_EQ(l.l3, cplx(-2.0));
    EXPECT_EQ(l.d13(), cplx(4.0));
}

TEST(Dirichlet, EulerFactorsMatchSeries) {
    for (auto lam : {Lambda(2, 0, -2), Lambda(3, 1, -4), Lambda::from_two({2.5, 0.3}, {0.2, -0.1})})
        for (int64_t p : {2, 3, 5, 7, 11, 13}) {
            cplx a = euler_factor(p, lam), b = euler_factor_series(p, lam, 24);
            EXPECT_LT(std::abs(a - b), 1e-8) << p;
        }
}

TEST(Dirichlet, PolesRejected) {
    // 1 - p^{-2x} vanishes at x = l1 - l2 = 0
    EXPECT_THROW(euler_factor_odd(3, Lambda(1, 1, -2)), std::domain_error);
    EXPECT_THROW(bigcell_series_check(Lambda(1, 0, -1), 100), std::domain_error);
}

TEST(Dirichlet, SquarePhiSeries) {
    SeriesCheck c = squarephi_check(2.0, 20000);
    EXPECT_LT(c.error, 1e-3);
}

TEST(Dirichlet, BigCellSeries) {
    SeriesCheck c = bigcell_series_check(Lambda(2, 0, -2), 2000);
    EXPECT_LT(c.error, 1e-4);
}

TEST(Dirichlet, SemidegenerateLimit) {
    Lambda lam(0.5, 1.5, -2.0);  // Re(l2 - l3) = 3.5
    cplx s = semidegenerate_series(lam, 0, 4000), lim = semidegenerate_limit(lam);
    EXPECT_LT(std::abs(s - lim) / std::abs(lim), 1e-6);
}

TEST(Dirichlet, CoefficientForms) {
    for (auto lam : {Lambda(2, 0, -2), Lambda(3, 1, -4), Lambda::from_two({2.5, 0.3}, {0.2, -0.1})})
        EXPECT_LT(compare_coefficient_forms(lam).max_error, 1e-10);
    // the literal root-set reading swaps the three-cycle cells
    EXPECT_GT(compare_coefficient_forms(Lambda(3, 1, -4), RootSetReading::WWl).max_error, 1e-3);
}
