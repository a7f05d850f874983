#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Cyclotomic, RootRelations) {
    CycElem i = root(4, 1);
    EXPECT_TRUE(equal(i * i, CycElem::integer(-1)));
    for (int64_t p : {2, 3, 5, 7, 11}) {
        CycElem s(p);
        for (int64_t j = 0; j < p; ++j) s += root(p, j);
        EXPECT_TRUE(is_zero(s)) << p;
    }
    // sum of primitive 12th roots is mu(12) = 0; of primitive 6th roots is mu(6) = 1
    CycElem s12(12), s6(6);
    for (int64_t j : {1, 5, 7, 11}) s12 += root(12, j);
    for (int64_t j : {1, 5}) s6 += root(6, j);
    EXPECT_TRUE(is_zero(s12));
    EXPECT_TRUE(equal(s6, CycElem::integer(1)));
}

TEST(Cyclotomic, AsInteger) {
    CycElem x = root(3, 1) + root(3, 2);  // = -1
    BigInt n;
    ASSERT_TRUE(as_integer(x, n));
    EXPECT_EQ(n, BigInt(-1));
    EXPECT_FALSE(as_integer(root(8, 1), n));
}

TEST(Cyclotomic, LiftAndCompactPreserveValue) {
    CycElem x = root(6, 1).scale(3) + root(4, 3);
    EXPECT_TRUE(equal(x, x.lift(120)));
    EXPECT_TRUE(equal(x.lift(120).compact(), x));
    EXPECT_NEAR(std::abs(x.to_complex() - x.lift(120).to_complex()), 0.0, 1e-15);
}

TEST(Cyclotomic, FastZeroTestMatchesRemainder) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        int64_t n = 1 + static_cast<int64_t>(rng() % 72);
        CycElem x(n);
        for (int k = 0; k < 4; ++k) x.add_term(static_cast<int64_t>(rng() % n), static_cast<int64_t>(rng() % 5) - 2);
        // add a vanishing sum over a random divisor's cosets half the time
        if (t % 2) {
            int64_t d = 1;
            for (int64_t q = 2; q <= n; ++q)
                if (n % q == 0) {
                    d = q;
                    break;
                }
            if (d > 1)
                for (int64_t j = 0; j < d; ++j) x.add_term(j * (n / d), 3);
        }
        EXPECT_EQ(is_zero(x), is_zero_by_remainder(x)) << t;
    }
}

TEST(Cyclotomic, PropertySuite) {
    SuiteResult r = verify_cyclotomic({.max = 120});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Cyclotomic, OrderValidated) { EXPECT_THROW(CycElem(0), std::domain_error); }
