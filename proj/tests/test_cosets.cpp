#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Cosets, EmptyCases) {
    EXPECT_TRUE(enumerate_bruteforce(1, 1).elements.empty());
    EXPECT_TRUE(enumerate_bruteforce(3, 2).elements.empty());
    EXPECT_EQ(enumerate_bruteforce(1, -1).elements.size(), 1u);
    SuiteResult r = verify_coset_empty({.max = 20});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Cosets, ElementsAreValidAndInFundamentalDomain) {
    for (auto [a1, a2] : std::vector<std::pair<int64_t, int64_t>>{{9, -9}, {8, -4}, {12, -20}, {5, 3}, {-7, 3}}) {
        auto s = enumerate_bruteforce(a1, a2);
        EXPECT_FALSE(s.elements.empty());
        EXPECT_EQ(s.duplicates, 0u);
        for (auto& p : s.elements) {
            EXPECT_TRUE(p.valid()) << p;
            EXPECT_TRUE(in_fundamental_domain(p)) << p;
            EXPECT_EQ(p.A1, BigInt(a1));
            EXPECT_EQ(p.A2, BigInt(a2));
        }
    }
}

TEST(Cosets, RelativelyPrimeCount) {
    for (auto [a1, a2] : std::vector<std::pair<int64_t, int64_t>>{{5, 3}, {7, -3}, {9, -5}, {11, -7}, {25, 7}}) {
        auto s = enumerate_relprime(a1, a2);
        EXPECT_EQ(s.elements.size(), static_cast<size_t>(euler_phi(a1) * euler_phi(a2 < 0 ? -a2 : a2)));
        EXPECT_EQ(s.elements, enumerate_bruteforce(a1, a2).elements);
    }
    EXPECT_THROW(enumerate_relprime(3, 9), std::domain_error);
}

TEST(Cosets, ClosedFamiliesSmall) {
    SuiteResult r = verify_coset_closed({.max = 81});
    EXPECT_TRUE(r.passed) << (r.messages.empty() ? "" : r.messages[0]);
}

TEST(Cosets, DomainErrors) {
    EXPECT_THROW(enumerate_bruteforce(0, 1), std::domain_error);
    EXPECT_THROW(enumerate_bruteforce(1000, 1000), std::domain_error);  // above the default cap
    EXPECT_THROW(enumerate_closed(4, 1, 0, 1), std::domain_error);
    EXPECT_THROW(enumerate_closed(3, 1, 2, 1), std::domain_error);
}
