#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Kronecker, KnownValues) {
    EXPECT_EQ(kronecker(2, 7), 1);
    EXPECT_EQ(kronecker(2, 3), -1);
    EXPECT_EQ(kronecker(-1, 3), -1);
    EXPECT_EQ(kronecker(-1, 5), 1);
    EXPECT_EQ(kronecker(3, 2), -1);
    EXPECT_EQ(kronecker(7, 2), 1);
    EXPECT_EQ(kronecker(6, 9), 0);
    EXPECT_EQ(kronecker(1001, 9907), -1);
    EXPECT_EQ(kronecker(0, 1), 1);
    EXPECT_EQ(kronecker(0, 2), 0);
    EXPECT_EQ(kronecker(1, 0), 1);
    EXPECT_EQ(kronecker(2, 0), 0);
    EXPECT_EQ(kronecker(-1, -1), -1);
    EXPECT_EQ(kronecker(1, -1), 1);
}

TEST(Kronecker, BigIntMatchesInt64) {
    for (int64_t a = -40; a <= 40; ++a)
        for (int64_t n = -40; n <= 40; ++n) EXPECT_EQ(kronecker(BigInt(a), BigInt(n)), kronecker(a, n)) << a << " " << n;
}

TEST(Kronecker, PropertySuite) {
    SuiteResult r = verify_kronecker({.max = 40});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Hilbert, RealSymbol) {
    EXPECT_EQ(hilbert_real(-1, -1), -1);
    EXPECT_EQ(hilbert_real(-1, 3), 1);
    EXPECT_EQ(hilbert_real(5, -2), 1);
    EXPECT_THROW(hilbert_real(0, 1), std::domain_error);
}

TEST(Arith, PhiFactorizeInverse) {
    EXPECT_EQ(euler_phi(36), 12);
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(97), 96);
    auto f = factorize(-360);
    ASSERT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(f.factors[0], (std::pair<int64_t, int>{2, 3}));
    EXPECT_EQ(two_valuation(-48), 4);
    EXPECT_EQ(odd_part(-48), -3);
    EXPECT_EQ(mod_inverse(3, 7), 5);
    EXPECT_THROW(mod_inverse(2, 4), std::domain_error);
    EXPECT_TRUE(is_square(144));
    EXPECT_FALSE(is_square(-4));
}

TEST(Arith, Crt) {
    auto [x, m] = crt({{BigInt(2), BigInt(3)}, {BigInt(3), BigInt(5)}, {BigInt(2), BigInt(7)}});
    EXPECT_EQ(m, BigInt(105));
    EXPECT_EQ(x, BigInt(23));
    EXPECT_THROW(crt({{BigInt(1), BigInt(4)}, {BigInt(1), BigInt(6)}}), std::domain_error);
}

TEST(BigInt, OverflowFallsBackToGmp) {
    BigInt a(INT64_MAX);
    BigInt b = a * a;
    EXPECT_EQ(b.str(), "85070591730234615847396907784232501249");
    EXPECT_EQ(b / a, a);
    EXPECT_EQ(floor_div(BigInt(-7), BigInt(2)), BigInt(-4));
    EXPECT_EQ(mod_floor(BigInt(-7), BigInt(4)), BigInt(1));
    EXPECT_EQ(gcd(BigInt(-12), BigInt(18)), BigInt(6));
}
