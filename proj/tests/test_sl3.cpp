#include "mtp/verify.hpp"

#include <gtest/gtest.h>

using namespace mtp;

TEST(Sl3, BruhatReconstructs) {
    for (uint64_t s = 1; s <= 200; ++s) {
        Mat3 g = random_rational_sl3(s);
        Bruhat b = bruhat_decompose(g);
        EXPECT_EQ(b.n * b.t * b.w() * b.np, g) << g;
        EXPECT_TRUE(b.t.is_diagonal());
        for (const Mat3* u : {&b.n, &b.np})
            EXPECT_TRUE((*u)(0, 0) == 1 && (*u)(1, 1) == 1 && (*u)(2, 2) == 1 && (*u)(1, 0) == 0 && (*u)(2, 0) == 0 && (*u)(2, 1) == 0);
    }
    EXPECT_THROW(bruhat_decompose(Mat3::diag(1, 0, 1)), std::domain_error);
}

TEST(Sl3, WeylRepresentatives) {
    EXPECT_EQ(w_alpha1() * w_alpha2() * w_alpha1(), w_alpha2() * w_alpha1() * w_alpha2());
    EXPECT_EQ(w_alpha1() * w_alpha1(), Mat3::diag(-1, -1, 1));
}

TEST(Sl3, PluckerRelationAndCells) {
    for (uint64_t s = 1; s <= 200; ++s) {
        Mat3 g = random_gamma14(s);
        ASSERT_TRUE(is_gamma14(g));
        RawPlucker r = plucker_from_matrix(g);
        EXPECT_TRUE(r.quadric_holds());
        GammaPlucker p = to_scaled(r);
        EXPECT_TRUE(p.valid()) << p;
        EXPECT_EQ(to_raw(p).a1p, r.a1p);
    }
    EXPECT_EQ(classify_cell(to_scaled(plucker_from_matrix(Mat3::identity()))), WeylCell::B);
    EXPECT_FALSE(is_gamma14(Mat3{1, 0, 0, 1, 1, 0, 0, 0, 1}));
}

TEST(Sl3, CosetRepresentativeHasCoordinates) {
    for (uint64_t s = 1; s <= 100; ++s) {
        GammaPlucker p = to_scaled(plucker_from_matrix(random_gamma14(s, 3, 8)));
        Mat3 g = coset_representative(p);
        EXPECT_EQ(g.det(), 1);
        EXPECT_EQ(to_scaled(plucker_from_matrix(g)), p);
    }
}
