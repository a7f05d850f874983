#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

namespace {
BigInt int_value(const CycElem& v) {
    BigInt n;
    EXPECT_TRUE(as_integer(v, n));
    return n;
}
}  // namespace

TEST(Sigma, TrivialModuli) {
    for (int64_t m1 : {0, 1, 5})
        for (int64_t m2 : {0, 2, 7}) {
            EXPECT_EQ(int_value(sigma_general({1, -1, m1, m2})), BigInt(1));
            EXPECT_EQ(int_value(sigma_general({1, 1, m1, m2})), BigInt(0));
            EXPECT_EQ(int_value(sigma_bruteforce({1, -1, m1, m2})), BigInt(1));
        }
}

TEST(Sigma, DyadicVanishing) {
    for (int k = 1; k <= 6; ++k)
        for (int l : {0, 1})
            for (int mu : {1, -1}) {
                if (k <= l) continue;
                for (int64_t m1 : {0, 1, 3})
                    for (int64_t m2 : {0, 1, 2}) EXPECT_TRUE(is_zero(sigma_closed_two(k, l, mu, m1, m2))) << k << l << mu;
            }
}

TEST(Sigma, ConstantTermMatchesBruteForce) {
    for (int64_t a1 = 1; a1 <= 30; ++a1)
        for (int64_t a2 = -30; a2 <= 30; ++a2) {
            if (!a2 || mod64(a1 + a2, 4)) continue;
            EXPECT_EQ(sigma_constant(a1, a2), int_value(sigma_bruteforce({a1, a2, 0, 0}))) << a1 << " " << a2;
        }
}

TEST(Sigma, OracleSmall) {
    SuiteResult r = verify_sigma_oracle({.max = 24});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Sigma, SpotChecks) {
    SuiteResult r = verify_sigma_spot({});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Sigma, BbfhSmall) {
    SuiteResult r = verify_bbfh({.max = 3});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Sigma, SymmetriesAndIndexTwists) {
    SuiteResult r = verify_expsym({.max = 16});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Sigma, DomainErrors) {
    EXPECT_THROW(sigma_closed_odd(9, 2, 1, 1, 0, 0), std::domain_error);
    EXPECT_THROW(sigma_closed_two(1, 2, 1, 0, 0), std::domain_error);
    EXPECT_THROW(sigma_bbfh_odd(3, 2, 1, -1, 0, 0), std::domain_error);  // p^{k-l} = 3 != -mu mod 4
}
