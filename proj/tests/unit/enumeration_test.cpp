#include "latext/enumeration.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "latext/planar.hpp"
#include "support.hpp"

namespace latext {
namespace {

using testing::frac;
using testing::sqrt_q;

std::set<Vec<Integer>> as_set(const std::vector<Vec<Integer>>& v) { return {v.begin(), v.end()}; }

TEST(SuccessiveMinimaTest, IntegerLattice) {
  auto m = successive_minima(ExactLattice(QuadMatrix::identity(2)));
  EXPECT_EQ(m.squared, (std::vector<QuadScalar>{1, 1}));
  EXPECT_EQ(as_set(m.coordinates), (std::set<Vec<Integer>>{{1, 0}, {0, 1}}));
}

TEST(SuccessiveMinimaTest, Hexagonal) {
  auto m = successive_minima(ExactLattice(testing::hexagonal_basis()));
  EXPECT_EQ(m.squared, (std::vector<QuadScalar>{1, 1}));
  auto r = successive_minima(RealLattice(to_real(testing::hexagonal_basis())));
  EXPECT_NEAR(r.values[0], 1.0, 1e-12);
  EXPECT_NEAR(r.values[1], 1.0, 1e-12);
}

TEST(SuccessiveMinimaTest, LPrime) {
  ExactLattice lp(testing::lprime_basis());
  auto m = successive_minima(lp);
  EXPECT_EQ(m.squared, (std::vector<QuadScalar>{1, frac(13, 4)}));
  EXPECT_NEAR(m.values[1], std::sqrt(13.0) / 2, 1e-15);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(norm2(lp.point(m.coordinates[i])), m.squared[i]);
}

TEST(SuccessiveMinimaTest, RankLimit) {
  try {
    successive_minima(RealLattice(RealMatrix::identity(7)));
    FAIL() << "expected an error";
  } catch (const LatticeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

TEST(SuccessiveMinimaTest, RandomLatticesBothBackends) {
  auto rng = testing::make_rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = testing::uniform(rng, 1, 5);
    IntMatrix b = testing::random_full_rank(rng, n, n, -6, 6);
    ExactLattice exact(integer_cast<QuadScalar>(b));
    RealLattice real(integer_cast<double>(b));
    auto me = successive_minima(exact);
    auto mr = successive_minima(real);
    testing::audit(exact, "enumeration_test");
    testing::audit(real, "enumeration_test");
    ASSERT_EQ(me.squared.size(), n);
    EXPECT_TRUE(independent(me.coordinates));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(norm2(exact.point(me.coordinates[i])), me.squared[i]);
      EXPECT_NEAR(mr.values[i], me.values[i], 1e-9 * me.values[i]);
      if (i > 0) EXPECT_LE(me.squared[i - 1], me.squared[i]);
    }
    // lambda_1 against every point in a slightly larger ball
    QuadScalar r2 = me.squared[0];
    auto pts = points_in_ball(exact.gram(), r2);
    for (const auto& p : pts) EXPECT_EQ(p.norm_squared, r2);
  }
}

TEST(PointsInBallTest, CountsIntegerPoints) {
  // Z^2 points with 0 < x^2 + y^2 <= 5: 4 + 4 + 4 + 8
  auto pts = points_in_ball(QuadMatrix::identity(2), QuadScalar(5));
  EXPECT_EQ(pts.size(), 20u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.norm_squared < b.norm_squared;
  }));
}

TEST(ClosestVectorTest, Examples) {
  RealLattice z2(RealMatrix::identity(2));
  auto a = closest_vector(z2, {0.4, 0.6});
  EXPECT_EQ(a.coordinates, (Vec<Integer>{0, 1}));
  ExactLattice line(QuadMatrix::from_columns({{2, 4}}));
  auto b = closest_vector(line, {frac(2, 5), frac(4, 5)});
  EXPECT_EQ(b.coordinates, (Vec<Integer>{0}));
  EXPECT_EQ(b.distance_squared, frac(4, 5));
  EXPECT_NEAR(b.distance, 2 / std::sqrt(5.0), 1e-15);
  auto c = closest_vector(ExactLattice(QuadMatrix::identity(2)), {frac(1, 2), frac(1, 2)});
  EXPECT_EQ(c.coordinates, (Vec<Integer>{0, 0}));
  EXPECT_EQ(c.distance_squared, frac(1, 2));
}

TEST(ClosestVectorTest, ProjectsOntoSpan) {
  ExactLattice line(QuadMatrix::from_columns({{1, 0}}));
  auto c = closest_vector(line, {frac(7, 4), QuadScalar(3)});
  EXPECT_EQ(c.coordinates, (Vec<Integer>{2}));
  EXPECT_EQ(c.distance_squared, frac(1, 16) + QuadScalar(9));
}

TEST(ClosestVectorTest, BeatsEveryNearbyPoint) {
  auto rng = testing::make_rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = testing::uniform(rng, 1, 4);
    IntMatrix b = testing::random_full_rank(rng, n, n, -5, 5);
    QuadMatrix g = gram_of(integer_cast<QuadScalar>(b));
    Vec<QuadScalar> center(n);
    for (auto& x : center) x = frac(testing::uniform(rng, -40, 40), testing::uniform(rng, 1, 8));
    auto cv = closest_vector_coordinates(g, center);
    // re-enumerate around the center: compare against lattice points within 2 d
    auto diff = [&](const Vec<Integer>& c) {
      Vec<QuadScalar> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = QuadScalar(c[i]) - center[i];
      QuadScalar s(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += d[i] * g(i, j) * d[j];
      return s;
    };
    EXPECT_EQ(diff(cv.coordinates), cv.distance_squared);
    QuadScalar radius2 = QuadScalar(4) * cv.distance_squared + QuadScalar(1);
    for (const auto& p : points_in_ball(g, radius2)) {
      Vec<Integer> c = p.coordinates;
      for (std::size_t i = 0; i < n; ++i) c[i] += cv.coordinates[i];
      EXPECT_GE(diff(c), cv.distance_squared);
    }
  }
}

TEST(JarnikTest, Examples) {
  EXPECT_DOUBLE_EQ(jarnik_upper(ExactLattice(QuadMatrix::identity(2))), 1.0);
  EXPECT_DOUBLE_EQ(jarnik_upper(ExactLattice(testing::hexagonal_basis())), 1.0);
  EXPECT_DOUBLE_EQ(jarnik_upper(ExactLattice(QuadMatrix::identity(3))), 1.5);
}

TEST(JarnikTest, DominatesPlanarCoveringRadius) {
  auto rng = testing::make_rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    ExactLattice l(integer_cast<QuadScalar>(testing::random_full_rank(rng, 2, 2, -9, 9)));
    auto mu = covering_radius_2d(l);
    auto m = successive_minima(l);
    // (l1 + l2)^2 / 4 >= mu^2, exactly: l1^2 + l2^2 + 2 l1 l2 >= 4 mu^2
    QuadScalar lhs = m.squared[0] + m.squared[1] - QuadScalar(4) * mu.mu_squared;
    QuadScalar prod = m.squared[0] * m.squared[1];
    // lhs + 2 sqrt(prod) >= 0
    bool ok = lhs.sign() >= 0 || QuadScalar(4) * prod >= lhs * lhs;
    EXPECT_TRUE(ok);
    EXPECT_GE(jarnik_upper(l), mu.mu);
  }
}

TEST(MinkowskiTest, SandwichStandardForm) {
  EXPECT_NEAR(unit_ball_volume(2), std::numbers::pi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(3), 4 * std::numbers::pi / 3, 1e-14);
  MinkowskiSandwich z2 = minkowski_sandwich({1.0, 1.0}, 1.0);
  EXPECT_TRUE(z2.holds);
  EXPECT_NEAR(z2.lower, 2 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(z2.upper, 4 / std::numbers::pi, 1e-15);
  EXPECT_FALSE(minkowski_sandwich({1.0, 3.0}, 1.0).holds);
}

TEST(LllTest, TransformIsUnimodular) {
  auto rng = testing::make_rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = testing::uniform(rng, 2, 6);
    IntMatrix b = testing::random_full_rank(rng, n, n, -20, 20) * testing::random_unimodular(rng, n, 10, 3);
    IntMatrix u = lll_transform(to_real(gram_of(integer_cast<QuadScalar>(b))));
    EXPECT_EQ(abs(integer_determinant(u)), 1);
  }
}

TEST(LllTest, SizeReductionUsesGramSchmidt) {
  // a skewed basis of a lattice with minima 1, 1, 1, sqrt 2, sqrt 5
  RealMatrix g = RealMatrix::from_columns({{189, -75, -102, -1351, 6},
                                           {-75, 195, 12, 1228, 6},
                                           {-102, 12, 140, -449, -5},
                                           {-1351, 1228, -449, 26562, -4},
                                           {6, 6, -5, -4, 1}});
  IntMatrix u = lll_transform(g);
  RealMatrix uu = integer_cast<double>(u);
  RealMatrix r = uu.transpose() * g * uu;
  std::vector<double> diag;
  for (std::size_t i = 0; i < 5; ++i) diag.push_back(r(i, i));
  std::sort(diag.begin(), diag.end());
  EXPECT_EQ(diag, (std::vector<double>{1, 1, 1, 2, 5}));
}

TEST(SignCanonicalTest, Basics) {
  Vec<Integer> v{0, -2, 3};
  EXPECT_TRUE(sign_canonical(v));
  EXPECT_EQ(v, (Vec<Integer>{0, 2, -3}));
  Vec<Integer> z{0, 0};
  EXPECT_FALSE(sign_canonical(z));
}

}  // namespace
}  // namespace latext
