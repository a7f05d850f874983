#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Splitting, TrivialOnIdentityAndUpperTriangular) {
    EXPECT_EQ(s_of_matrix(Mat3::identity()), 1);
    EXPECT_EQ(s_of_matrix(Mat3::n(2, -3, 5)), 1);
    EXPECT_THROW(s_of_matrix(Mat3::diag(-1, -1, 1)), std::domain_error);
}

TEST(Splitting, HomomorphismOnRandomPairs) {
    for (uint64_t s = 1; s <= 200; ++s) {
        Mat3 g1 = random_gamma14(2 * s), g2 = random_gamma14(2 * s + 1);
        EXPECT_EQ(s_of_matrix(g1 * g2), s_of_matrix(g1) * s_of_matrix(g2) * sigma(g1, g2)) << s;
    }
}

TEST(Splitting, SymmetriesOnSmallCosets) {
    SuiteResult r = verify_splitting({.max = 150});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Splitting, TwistedMultiplicativity) {
    TwistMultReport t = check_twistmult(3, 5, 7, -1);
    EXPECT_TRUE(t.ok()) << t.first_failure;
    SuiteResult r = verify_twistmult({.max = 9});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Splitting, SplitHypothesesEnforced) {
    EXPECT_THROW(check_twistmult(3, 5, 3, 1), std::domain_error);
}
