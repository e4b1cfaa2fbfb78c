#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "test_seeds.hpp"
#include "wps/parser.hpp"
#include "wps/polytope.hpp"
#include "wps/svg.hpp"

using namespace wps;

namespace {

HPoint hp(std::initializer_list<Rational> v) { return HPoint(v); }

TEST(ProjectionTest, PaperVertices) {
    auto X = WeightedSpace::make({1, 1, 2});
    EXPECT_EQ(project_exponent(X, {0, 0, 2}), hp({-1, -1}));
    EXPECT_EQ(project_exponent(X, {4, 0, 0}), hp({4, 0}));
    EXPECT_EQ(project_exponent(X, {2, 0, 1}), hp({Rational(3, 2), Rational(-1, 2)}));
}

TEST(ProjectionTest, LinearAndKillsWeightVector) {
    auto X = WeightedSpace::make({1, 2, 3});
    ExponentVector a = {1, 1, 1}, b = {3, 0, 1};
    HPoint pa = project_exponent(X, a), pb = project_exponent(X, b);
    ExponentVector sum = {4, 1, 2};
    HPoint ps = project_exponent(X, sum);
    for (int j = 0; j < 2; ++j) EXPECT_EQ(ps[j], pa[j] + pb[j]);
    // pi annihilates the weight vector itself
    HPoint pw = project_exponent(X, {1, 2, 3});
    EXPECT_EQ(pw, hp({0, 0}));
}

TEST(SectionPolytopeTest, WPP112Degree4) {
    auto X = WeightedSpace::make({1, 1, 2});
    HPointSet S = section_polytope(X, 4);
    EXPECT_EQ(S.points.size(), 9u);
    auto hull = hull2d(S.points);
    ASSERT_EQ(hull.size(), 3u);
    // monotone-chain order starting at the lexicographic minimum
    EXPECT_EQ(hull[0], hp({-1, -1}));
    EXPECT_EQ(hull[1], hp({4, 0}));
    EXPECT_EQ(hull[2], hp({0, 4}));
}

TEST(SectionPolytopeTest, OneDimensionalProjection) {
    auto X = WeightedSpace::make({1, 1});
    HPointSet S = section_polytope(X, 2);
    ASSERT_EQ(S.points.size(), 3u);
    EXPECT_EQ(S.points[0], hp({2}));
    EXPECT_EQ(S.points[1], hp({0}));
    EXPECT_EQ(S.points[2], hp({-2}));
}

TEST(SectionPolytopeTest, OriginNeverOutside) {
    std::vector<std::pair<std::vector<long long>, long long>> cases = {
        {{1, 1, 2}, 2},  {{1, 1, 2}, 4},       {{1, 1, 2}, 6},
        {{1, 1, 3}, 6},  {{1, 1, 1, 2}, 4},    {{1, 2, 3}, 6},
        {{2, 3}, 6},     {{2, 2, 3, 3, 5}, 30}};
    for (const auto& [w, d] : cases) {
        auto X = WeightedSpace::make(w);
        EXPECT_NE(origin_membership(section_polytope(X, d)),
                  MembershipStatus::Outside);
    }
}

TEST(SectionPolytopeTest, NoMonomialsIsAnError) {
    try {
        section_polytope(WeightedSpace::make({2, 3}), 1);
        FAIL() << "expected EmptyLinearSystem";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyLinearSystem);
    }
}

TEST(NewtonPointsTest, Examples) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto f = parse_polynomial(X, 4, "x*y^3 + x^2*z + y^2*z + z^2");
    HPointSet S = newton_points(f);
    ASSERT_EQ(S.points.size(), 4u);
    std::vector<HPoint> expected = {
        hp({1, 3}),
        hp({Rational(3, 2), Rational(-1, 2)}),
        hp({Rational(-1, 2), Rational(3, 2)}),
        hp({-1, -1})};
    for (const auto& p : expected)
        EXPECT_NE(std::find(S.points.begin(), S.points.end(), p), S.points.end());

    EXPECT_EQ(newton_points(parse_polynomial(X, 4, "z^2")).points,
              (std::vector<HPoint>{hp({-1, -1})}));
    EXPECT_EQ(newton_points(parse_polynomial(X, 4, "x^4+y^4+z^2")).points.size(),
              3u);
    EXPECT_THROW(newton_points(WeightedPolynomial(X, 4)), Error);
}

TEST(OriginMembershipTest, SpecExamples) {
    HPointSet tri;
    tri.dim = 2;
    tri.insert(hp({4, 0}));
    tri.insert(hp({0, 4}));
    tri.insert(hp({-1, -1}));
    auto om = origin_membership_certified(tri);
    EXPECT_EQ(om.status, MembershipStatus::Interior);
    ASSERT_EQ(om.mu.size(), 3u);
    Rational total(0);
    for (const auto& q : om.mu) {
        EXPECT_GT(q, 0);
        total += q;
    }
    EXPECT_EQ(total, Rational(1));
    for (int j = 0; j < 2; ++j) {
        Rational combo(0);
        for (std::size_t i = 0; i < 3; ++i) combo += om.mu[i] * tri.points[i][j];
        EXPECT_EQ(combo, Rational(0));
    }

    HPointSet single;
    single.dim = 2;
    single.insert(hp({-1, -1}));
    EXPECT_EQ(origin_membership(single), MembershipStatus::Outside);

    HPointSet segment;
    segment.dim = 2;
    segment.insert(hp({1, 0}));
    segment.insert(hp({-1, 0}));
    EXPECT_EQ(origin_membership(segment), MembershipStatus::Boundary);

    HPointSet origin_only;
    origin_only.dim = 2;
    origin_only.insert(hp({0, 0}));
    EXPECT_EQ(origin_membership(origin_only), MembershipStatus::Boundary);
}

HPointSet random_point_set(std::mt19937_64& rng, int dim, int count) {
    HPointSet S;
    S.dim = dim;
    for (int i = 0; i < count; ++i) {
        HPoint p(dim);
        for (int j = 0; j < dim; ++j) {
            long long num = static_cast<long long>(rng() % 11) - 5;
            long long den = 1 + static_cast<long long>(rng() % 4);
            p[j] = Rational(num, den);
        }
        S.insert(p);
    }
    return S;
}

TEST(OriginMembershipTest, AgreesWithBruteForceOracle) {
    std::mt19937_64 rng(seeds::kPolytopeLp);
    int outside = 0, boundary = 0, interior = 0;
    for (int round = 0; round < 120; ++round) {
        int dim = 1 + static_cast<int>(rng() % 3);
        int count = 1 + static_cast<int>(rng() % 12);
        HPointSet S = random_point_set(rng, dim, count);
        auto fast = origin_membership(S);
        auto slow = oracles::membership_oracle(S);
        ASSERT_EQ(fast, slow) << "dim=" << dim << " count=" << S.points.size();
        if (fast == MembershipStatus::Outside) ++outside;
        if (fast == MembershipStatus::Boundary) ++boundary;
        if (fast == MembershipStatus::Interior) ++interior;
    }
    // the sample must actually exercise all three statuses
    EXPECT_GT(outside, 0);
    EXPECT_GT(boundary, 0);
    EXPECT_GT(interior, 0);
}

TEST(OriginMembershipTest, MonotoneUnderAddingPoints) {
    auto rank_of = [](MembershipStatus s) {
        return s == MembershipStatus::Outside ? 0
               : s == MembershipStatus::Boundary ? 1
                                                 : 2;
    };
    std::mt19937_64 rng(seeds::kPolytopeLp + 1);
    for (int round = 0; round < 60; ++round) {
        int dim = 1 + static_cast<int>(rng() % 3);
        HPointSet S = random_point_set(rng, dim, 1 + static_cast<int>(rng() % 8));
        int before = rank_of(origin_membership(S));
        HPointSet bigger = S;
        for (const auto& p : random_point_set(rng, dim, 3).points) bigger.insert(p);
        EXPECT_GE(rank_of(origin_membership(bigger)), before);
    }
}

TEST(Hull2dTest, CollinearPointsDropOut) {
    std::vector<HPoint> pts = {hp({0, 0}), hp({1, 1}), hp({2, 2}), hp({0, 2})};
    auto hull = hull2d(pts);
    ASSERT_EQ(hull.size(), 3u);
    EXPECT_EQ(std::find(hull.begin(), hull.end(), hp({1, 1})), hull.end());
}

TEST(SvgTest, RendersPointsAndHull) {
    auto X = WeightedSpace::make({1, 1, 2});
    std::string svg = render_svg2d(section_polytope(X, 4), true);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("<polygon"), std::string::npos);
    EXPECT_NE(svg.find("<circle"), std::string::npos);

    HPointSet one;
    one.dim = 2;
    one.insert(hp({-1, -1}));
    std::string single = render_svg2d(one, true);
    EXPECT_NE(single.find("<circle"), std::string::npos);
    EXPECT_EQ(single.find("<polygon"), std::string::npos);
}

TEST(SvgTest, WritesFileAndReportsErrors) {
    auto X = WeightedSpace::make({1, 1, 2});
    std::string path = ::testing::TempDir() + "/wps_polytope.svg";
    emit_svg2d(section_polytope(X, 4), true, path);
    std::ifstream in(path);
    ASSERT_TRUE(in.good());
    std::string line;
    std::getline(in, line);
    EXPECT_NE(line.find("<svg"), std::string::npos);
    std::remove(path.c_str());

    HPointSet threed;
    threed.dim = 3;
    threed.insert(hp({1, 2, 3}));
    try {
        render_svg2d(threed, false);
        FAIL() << "expected DimensionNot2";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionNot2);
    }
    try {
        emit_svg2d(section_polytope(X, 4), true, "/nonexistent-dir/out.svg");
        FAIL() << "expected IOError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IOError);
    }
}

}  // namespace
