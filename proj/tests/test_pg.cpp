#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cutcode;

namespace {

Vec e(std::size_t len, std::size_t i) {
    Vec v(len, 0);
    v[i] = 1;
    return v;
}

// Number of d-dimensional subspaces of GF(q)^n, by the Gaussian binomial.
std::uint64_t gaussian(unsigned q, unsigned n, unsigned d) {
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < d; ++i) {
        std::uint64_t a = 1, b = 1;
        for (unsigned t = 0; t < n - i; ++t) a *= q;
        for (unsigned t = 0; t < i + 1; ++t) b *= q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

}  // namespace

TEST(Theta, Values) {
    EXPECT_EQ(theta(2, 2), 7u);
    EXPECT_EQ(theta(3, 2), 13u);
    EXPECT_EQ(theta(2, 3), 15u);
    EXPECT_EQ(theta(5, 0), 1u);
    EXPECT_EQ(theta(5, -1), 0u);
    EXPECT_THROW(theta(6, 2), std::invalid_argument);
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize(*gf::field_create(3), {0, 2, 1}), (Vec{0, 1, 2}));
    EXPECT_EQ(normalize(*gf::field_create(2), {1, 1, 0}), (Vec{1, 1, 0}));
    EXPECT_EQ(normalize(*gf::field_create(4), {2, 1, 0}), (Vec{1, 3, 0}));
    EXPECT_THROW(normalize(*gf::field_create(4), {0, 0, 0}), std::invalid_argument);
}

TEST(Space, CanonicalOrder) {
    for (auto [N, q] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {4, 2}}) {
        auto s = projective_space(N, q);
        ASSERT_EQ(s->size(), theta(q, N));
        EXPECT_EQ(s->coords(0), e(N + 1, N));
        for (std::size_t i = 0; i < s->size(); ++i) {
            const Vec& c = s->coords(i);
            ASSERT_EQ(normalize(s->field(), c), c);
            ASSERT_EQ(s->index_of(c), i);
            if (i) {
                ASSERT_TRUE(std::lexicographical_compare(s->coords(i - 1).begin(), s->coords(i - 1).end(), c.begin(), c.end()));
            }
        }
    }
}

TEST(Space, SpanAndIncidence) {
    auto s = projective_space(2, 2);
    EXPECT_EQ(span(*s, std::vector<Point>{s->normalize(e(3, 0)), s->normalize(e(3, 1))}).dim(), 1);
    EXPECT_EQ(span(*s, std::vector<Point>{s->normalize(e(3, 0)), s->normalize(e(3, 0))}).dim(), 0);
    auto s3 = projective_space(3, 3);
    std::vector<Point> basis;
    for (std::size_t i = 0; i < 4; ++i) basis.push_back(s3->normalize(e(4, i)));
    EXPECT_EQ(span(*s3, basis).dim(), 3);
    EXPECT_THROW(span(*s3, std::vector<Point>{s->normalize(e(3, 0))}), std::invalid_argument);

    // H: x1 = 0 (first coordinate).
    Flat h(s->field_ptr(), 3, {e(3, 1), e(3, 2)});
    EXPECT_FALSE(incident(*s, s->normalize(e(3, 0)), h));
    EXPECT_TRUE(incident(*s, s->normalize(e(3, 1)), h));
    EXPECT_THROW(incident(*s, s->normalize(e(3, 1)), Flat(s->field_ptr(), 3, {e(3, 1)})), std::invalid_argument);
    for (std::size_t p = 0; p < s->size(); ++p) EXPECT_EQ(s->hyperplanes_through(p).size(), 3u);
}

TEST(Space, HyperplaneTableMatchesDefinition) {
    for (auto [N, q] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 4}, {3, 3}, {4, 2}, {2, 9}}) {
        auto s = projective_space(N, q);
        oracle::Geometry g(*s);
        for (std::size_t h = 0; h < s->num_hyperplanes(); ++h) {
            std::vector<std::size_t> pts;
            const auto& bits = s->hyperplane_points(h);
            for (auto i = bits.find_first(); i != PointSet::npos; i = bits.find_next(i)) pts.push_back(i);
            ASSERT_EQ(pts, g.hyperplanes[h]);
            ASSERT_EQ(pts.size(), theta(q, N - 1));
            ASSERT_EQ(s->points_of(s->hyperplane_flat(h)), bits);
        }
    }
}

TEST(Line, Through) {
    auto s = projective_space(2, 2);
    auto l = line_through(*s, s->normalize({1, 0, 0}), s->normalize({0, 1, 0}));
    std::set<Vec> got;
    for (const auto& p : l) got.insert(p.coords);
    EXPECT_EQ(got, (std::set<Vec>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
    auto s3 = projective_space(3, 3);
    auto l3 = line_through(*s3, s3->normalize(e(4, 0)), s3->normalize(e(4, 1)));
    ASSERT_EQ(l3.size(), 4u);
    std::set<Vec> got3;
    for (const auto& p : l3) got3.insert(p.coords);
    EXPECT_TRUE(got3.count({1, 1, 0, 0}));
    EXPECT_TRUE(got3.count({1, 2, 0, 0}));
    for (unsigned q : {4u, 5u, 7u}) {
        auto sq = projective_space(2, q);
        EXPECT_EQ(line_through(*sq, sq->point(0), sq->point(5)).size(), q + 1);
    }
    EXPECT_THROW(line_through(*s, s->point(1), s->point(1)), std::invalid_argument);
}

TEST(Flats, HyperplanesThrough) {
    auto s = projective_space(2, 2);
    EXPECT_EQ(hyperplanes_through(*s, span(*s, std::vector<Point>{s->point(3)})).size(), 3u);
    for (unsigned q : {2u, 3u, 4u}) {
        auto s3 = projective_space(3, q);
        Flat line = span(*s3, std::vector<Point>{s3->point(0), s3->point(1)});
        EXPECT_EQ(hyperplanes_through(*s3, line).size(), q + 1);
    }
    auto s32 = projective_space(3, 2);
    EXPECT_EQ(hyperplanes_through(*s32, span(*s32, std::vector<Point>{s32->point(4)})).size(), 7u);
    EXPECT_THROW(hyperplanes_through(*s32, s32->whole()), std::invalid_argument);
}

TEST(Flats, EnumerationCounts) {
    EXPECT_EQ(enumerate_flats(*projective_space(2, 2), 1).size(), 7u);
    EXPECT_EQ(enumerate_flats(*projective_space(3, 2), 1).size(), 35u);
    EXPECT_EQ(enumerate_flats(*projective_space(4, 2), 3).size(), 31u);
    EXPECT_THROW(enumerate_flats(*projective_space(3, 2), 3), std::invalid_argument);
    EXPECT_THROW(enumerate_flats(*projective_space(3, 2), -1), std::invalid_argument);
    for (auto [N, q] : std::vector<std::pair<int, unsigned>>{{3, 2}, {3, 3}, {4, 2}, {3, 4}}) {
        auto s = projective_space(N, q);
        for (int d = 0; d < N; ++d) {
            auto flats = enumerate_flats(*s, d);
            ASSERT_EQ(flats.size(), gaussian(q, N + 1, d + 1)) << "N=" << N << " q=" << q << " d=" << d;
            std::set<std::vector<Vec>> distinct;
            for (const auto& f : flats) {
                ASSERT_EQ(f.dim(), d);
                distinct.insert(f.basis());
                ASSERT_EQ(s->points_of(f).count(), theta(q, d));
            }
            ASSERT_EQ(distinct.size(), flats.size());
        }
    }
}

TEST(Space, RankOf) {
    auto s = projective_space(3, 2);
    PointSet set = s->empty_set();
    EXPECT_EQ(s->rank_of(set), 0u);
    for (const auto& p : line_through(*s, s->point(1), s->point(2))) set.set(p.index);
    EXPECT_EQ(s->rank_of(set), 2u);
    set.set();
    EXPECT_EQ(s->rank_of(set), 4u);
}
