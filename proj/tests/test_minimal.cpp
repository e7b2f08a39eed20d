#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cutcode;

namespace {

void expect_valid_witness(const LinearCode& c, const MinimalityReport& r) {
    ASSERT_FALSE(r.minimal);
    ASSERT_TRUE(r.witness.has_value());
    const auto& [small, big] = *r.witness;
    EXPECT_TRUE(c.contains(small));
    EXPECT_TRUE(c.contains(big));
    EXPECT_GT(weight(small), 0u);
    EXPECT_TRUE(oracle::supp_subset(small, big));
    EXPECT_LT(weight(small), weight(big));
}

}  // namespace

TEST(Minimal, SimplexIsMinimalByAll) {
    auto c = simplex(2, 3).code;
    EXPECT_TRUE(is_minimal_naive(c).minimal);
    EXPECT_TRUE(is_minimal_hdz(c).minimal);
    auto ab = ab_sufficient(c);
    EXPECT_TRUE(ab.applies);
    EXPECT_EQ(ab.w_min, 4u);
    EXPECT_EQ(ab.w_max, 4u);
}

TEST(Minimal, IdentityCodeIsNot) {
    Matrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i) g(i, i) = 1;
    LinearCode c(gf::field_create(3), g);
    expect_valid_witness(c, is_minimal_naive(c));
    expect_valid_witness(c, is_minimal_hdz(c));
    EXPECT_FALSE(ab_sufficient(c).applies);
    EXPECT_FALSE(is_minimal_codeword(c, {1, 1, 0}));
    EXPECT_TRUE(is_minimal_codeword(c, {0, 2, 0}));
    EXPECT_THROW(is_minimal_codeword(c, {0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(is_reduced(c), std::invalid_argument);
}

TEST(Minimal, CriteriaAgreeWithDefinition) {
    std::mt19937_64 rng(29);
    int minimal = 0, not_minimal = 0;
    for (unsigned q : {2u, 3u, 4u}) {
        for (int t = 0; t < 80; ++t) {
            const std::size_t k = 2 + t % 3, n = k + 2 + t % 6;
            auto c = oracle::random_code(rng, q, k, n);
            const bool truth = oracle::is_minimal(c);
            auto naive = is_minimal_naive(c);
            auto hdz = is_minimal_hdz(c);
            ASSERT_EQ(naive.minimal, truth);
            ASSERT_EQ(hdz.minimal, truth);
            if (!truth) {
                expect_valid_witness(c, naive);
                expect_valid_witness(c, hdz);
            }
            if (ab_sufficient(c).applies) {
                ASSERT_TRUE(truth);
            }
            (truth ? minimal : not_minimal)++;
        }
    }
    EXPECT_GT(minimal, 10);
    EXPECT_GT(not_minimal, 10);
}

TEST(Minimal, ReducedConstructions) {
    EXPECT_TRUE(is_reduced(tetrahedron(3, 3).code));
    EXPECT_TRUE(is_reduced(dim4_construction(2, 1).code));
    EXPECT_TRUE(is_reduced(hexagonal_q2().code));
    EXPECT_TRUE(is_reduced(pentagonal(2).code));
    // The simplex code stays minimal after dropping a coordinate.
    EXPECT_FALSE(is_reduced(simplex(2, 3).code));
}

TEST(Minimal, TetrahedronAb) {
    // q = 3, k = 3: weights 5..7, 3*5 > 2*7.
    auto ab = ab_sufficient(tetrahedron(3, 3).code);
    EXPECT_TRUE(ab.applies);
    // q = 2, k = 6: weights 6..12 and 2*6 = 12, so the test is inconclusive on a minimal code.
    auto t = tetrahedron(2, 6);
    auto inconclusive = ab_sufficient(t.code);
    EXPECT_FALSE(inconclusive.applies);
    EXPECT_EQ(inconclusive.w_min, 6u);
    EXPECT_EQ(inconclusive.w_max, 12u);
    EXPECT_TRUE(is_minimal_hdz(t.code).minimal);
}
