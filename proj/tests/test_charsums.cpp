#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Gauss, QuadraticGaussSumSquares) {
    // g(p,1,p)^2 = (-1/p) p
    for (int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        CycElem g = gauss_g(p, 1, p);
        EXPECT_TRUE(equal(g * g, CycElem::integer(kronecker(-1, p) * p))) << p;
        auto z = g.to_complex();
        if (p % 4 == 1)
            EXPECT_NEAR(static_cast<double>(z.real()), std::sqrt(double(p)), 1e-12);
        else
            EXPECT_NEAR(static_cast<double>(z.imag()), std::sqrt(double(p)), 1e-12);
    }
}

TEST(Gauss, RamanujanSumsForTrivialCharacter) {
    // d = 1: g(1,m,n) is the Ramanujan sum c_n(m); c_n(1) = mu(n), c_n(0) = phi(n)
    BigInt v;
    ASSERT_TRUE(as_integer(gauss_g(1, 1, 30), v));
    EXPECT_EQ(v, BigInt(-1));
    ASSERT_TRUE(as_integer(gauss_g(1, 0, 30), v));
    EXPECT_EQ(v, BigInt(8));
    ASSERT_TRUE(as_integer(gauss_g(1, 1, 12), v));
    EXPECT_EQ(v, BigInt(0));
}

TEST(Gauss, DomainErrors) {
    EXPECT_THROW(gauss_g(3, 1, 5), std::domain_error);
    EXPECT_THROW(gauss_g(2, 1, 4), std::domain_error);
    EXPECT_NO_THROW(gauss_g(2, 1, 8));
    EXPECT_THROW(gauss_g_even(0, 0, 1, 3), std::domain_error);
    EXPECT_THROW(gauss_g_even(1, 1, 1, 2), std::domain_error);
}

TEST(Gauss, DyadicSplitsFullSum) {
    // g_+ + g_- = g(2^i, m, 2^k)
    for (int i = 0; i <= 3; ++i)
        for (int k = 3; k <= 6; ++k)
            for (int64_t m = 0; m < 8; ++m)
                EXPECT_TRUE(equal(gauss_g_even(1, i, m, k) + gauss_g_even(-1, i, m, k), gauss_g(int64_t{1} << i, m, int64_t{1} << k)))
                    << i << " " << k << " " << m;
}

TEST(Gauss, IdentitySuiteSmall) {
    SuiteResult r = verify_gauss_identities({.max = 2});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Kloosterman, ZeroFrequencyClosedForm) {
    for (int64_t kappa : {-1, 1, 2})
        for (int64_t n = 1; n <= 60; ++n) EXPECT_TRUE(equal(kloosterman_K(kappa, 0, n), kloosterman_zero_closed(kappa, n))) << kappa << " " << n;
    // K_1(0; 4) = 1 + i^{-1} times phi(4)/2 = 1 - i
    EXPECT_TRUE(equal(kloosterman_K(1, 0, 1), CycElem::integer(1) - root(4, 1)));
}

TEST(Kloosterman, DomainErrors) {
    EXPECT_THROW(kloosterman_K(1, 0, 0), std::domain_error);
    EXPECT_THROW(kloosterman_zero_closed(1, 0), std::domain_error);
}
