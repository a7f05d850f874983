#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Cocycle, TorusFormula) {
    // sigma(t(a), t(b)) = (a1,b2)(a1,b3)(a2,b3)
    Mat3 a = Mat3::diag(-1, -1, 1), b = Mat3::diag(1, -1, -1);
    EXPECT_EQ(sigma_torus(a, b), hilbert_q(-1, -1) * hilbert_q(-1, -1) * hilbert_q(-1, -1));
    EXPECT_EQ(sigma_torus(Mat3::diag(2, 3, Rational(1, 6)), Mat3::diag(-1, -1, 1)), 1);
}

TEST(Cocycle, TrivialOnUnipotentAndIdentity) {
    Mat3 n = Mat3::n(Rational(1, 2), 3, -1);
    for (uint64_t s = 1; s <= 50; ++s) {
        Mat3 g = random_rational_sl3(s);
        EXPECT_EQ(sigma(Mat3::identity(), g), 1);
        EXPECT_EQ(sigma(g, Mat3::identity()), 1);
        EXPECT_EQ(sigma(n, g), 1);
    }
    EXPECT_EQ(sigma(w_alpha1(), w_alpha1()), -1);
}

TEST(Cocycle, IdentityOnRandomTriples) {
    SuiteResult r = verify_cocycle({.max = 100});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Cocycle, MetaplecticInverse) {
    for (uint64_t s = 1; s <= 50; ++s) {
        MetaElem x{random_rational_sl3(s), s % 2 ? 1 : -1};
        MetaElem e = meta_mul(x, meta_inv(x));
        EXPECT_EQ(e.g, Mat3::identity());
        EXPECT_EQ(e.eps, 1);
    }
}

TEST(Cocycle, EpsilonIdentitiesSmall) {
    SuiteResult r = verify_epsilon({.max = 20});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}
