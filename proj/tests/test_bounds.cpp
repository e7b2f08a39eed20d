#include <gtest/gtest.h>

#include <cmath>

#include "cutcode/cutcode.hpp"

using namespace cutcode;

namespace {

const unsigned kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64};

}  // namespace

TEST(Bounds, Geometric) {
    EXPECT_EQ(lb_length_geometric(2, 4), 7u);
    EXPECT_EQ(lb_length_geometric(3, 4), 10u);
    EXPECT_EQ(lb_length_geometric(5, 1), 1u);
    EXPECT_EQ(lb_length_geometric(5, 4), 16u);
    EXPECT_THROW(lb_length_geometric(6, 3), std::invalid_argument);
}

TEST(Bounds, Distance) {
    EXPECT_EQ(lb_distance(2, 4), 4u);
    EXPECT_EQ(lb_distance(3, 3), 4u);
    EXPECT_EQ(lb_distance(2, 2), 2u);
    EXPECT_THROW(lb_distance(2, 1), std::invalid_argument);
}

TEST(Bounds, Griesmer) {
    EXPECT_EQ(lb_length_griesmer(2, 4), 8u);
    EXPECT_EQ(lb_length_griesmer(2, 5), 12u);
    EXPECT_EQ(lb_length_griesmer(5, 4), 11u);
    EXPECT_EQ(lb_length_griesmer(2, 3, 4), 7u);  // simplex [7,3,4]
    EXPECT_EQ(lb_length_griesmer(3, 3, 9), 13u);
    // Plain sum for large k, where q^i soon exceeds d.
    std::uint64_t expect = 0;
    for (unsigned i = 0; i < 40; ++i) expect += static_cast<std::uint64_t>(std::ceil(40.0 / std::pow(2.0, i)));
    EXPECT_EQ(lb_length_griesmer(2, 40), expect);
    EXPECT_THROW(lb_length_griesmer(2, 1), std::invalid_argument);
}

TEST(Bounds, Dim3) {
    EXPECT_EQ(lb_length_dim3(4), 12u);
    EXPECT_EQ(lb_length_dim3(9), 26u);
    EXPECT_EQ(lb_length_dim3(11), 31u);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) EXPECT_EQ(lb_length_dim3(q), 3 * q);
    EXPECT_EQ(lb_length_dim3(13), 36u);
    EXPECT_EQ(lb_length_dim3(16), 42u);
    EXPECT_EQ(lb_length_dim3(25), 62u);
    // Odd powers above 19 evaluate the stated formula as written.
    EXPECT_EQ(lb_length_dim3(23), 14u);  // d = 0: ceil(24/2) + 2
    EXPECT_EQ(lb_length_dim3(27), 11u);  // p = 3, d = 1: 3 ceil(10/4) + 2
    EXPECT_EQ(lb_length_dim3(32), 10u);  // p = 2, d = 2: 4 ceil(9/5) + 2
    for (unsigned q : kOrders) EXPECT_NO_THROW(lb_length_dim3(q)) << q;
}

TEST(Bounds, ReducedDim3Upper) {
    EXPECT_EQ(ub_length_reduced_dim3(4), 14u);
    EXPECT_EQ(ub_length_reduced_dim3(2), 6u);
    EXPECT_EQ(ub_length_reduced_dim3(8), 36u);
    for (unsigned q : kOrders) {
        const double exact = q / 2.0 * (std::sqrt(8.0 * q - 7) + 1) + 2;
        EXPECT_EQ(ub_length_reduced_dim3(q), static_cast<std::uint64_t>(std::floor(exact + 1e-9))) << q;
    }
}

TEST(Bounds, Conjectured) {
    EXPECT_EQ(conjectured_lb(3, 3).d_lb, 5u);
    EXPECT_EQ(conjectured_lb(2, 5).d_lb, 5u);
    EXPECT_EQ(conjectured_lb(2, 4).n_lb, 8u);
    EXPECT_TRUE(ConjecturedBound::conjectural);
    EXPECT_THROW(conjectured_lb(2, 1), std::invalid_argument);
}

TEST(Bounds, Rates) {
    EXPECT_DOUBLE_EQ(asymptotic_rates(2).one_over_q, 0.5);
    EXPECT_NEAR(asymptotic_rates(2).minimal, 0.5 * std::log2(4.0 / 3.0), 1e-12);
    EXPECT_NEAR(asymptotic_rates(3).maximal, std::log(2.0) / std::log(3.0), 1e-12);
    for (unsigned q = 2; q <= 64; ++q) {
        auto r = asymptotic_rates(q);
        EXPECT_LT(r.minimal, r.one_over_q);
        EXPECT_LT(r.one_over_q, r.maximal);
    }
}

TEST(Bounds, Best) {
    EXPECT_EQ(lb_length_best(2, 4), 8u);
    EXPECT_EQ(lb_length_best(5, 4), 16u);
    EXPECT_EQ(lb_length_best(2, 3), 6u);
    EXPECT_EQ(lb_length_best(9, 3), 26u);
    auto rep = bounds_report(2, 3);
    EXPECT_EQ(rep.lb_length_best, std::max({rep.lb_length_geometric, rep.lb_length_griesmer, *rep.lb_length_dim3}));
    EXPECT_FALSE(bounds_report(2, 4).lb_length_dim3.has_value());
}

TEST(Bounds, ConstructionsRespectBounds) {
    std::vector<ConstructionResult> all;
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned k : {3u, 4u}) all.push_back(tetrahedron(q, k));
    for (unsigned q : {2u, 3u, 4u}) all.push_back(dim4_construction(q, 1));
    all.push_back(pentagonal(2));
    all.push_back(pentagonal(3));
    all.push_back(hexagonal_q2());
    for (const auto& r : all) {
        const unsigned q = r.system.space().field().q(), k = static_cast<unsigned>(r.code.k());
        EXPECT_GE(r.code.n(), lb_length_best(q, k)) << r.label;
        EXPECT_GE(r.code.min_distance(), lb_distance(q, k)) << r.label;
        EXPECT_EQ(r.code.min_distance(), conjectured_lb(q, k).d_lb) << r.label;
        if (k == 3) {
            EXPECT_GE(r.code.n(), lb_length_dim3(q));
            EXPECT_LE(r.code.n(), ub_length_reduced_dim3(q));
        }
    }
}
