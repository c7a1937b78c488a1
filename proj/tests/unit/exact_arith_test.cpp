#include "latext/exact_arith.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

namespace latext {
namespace {

using testing::frac;
using testing::sqrt_q;

IntMatrix cols(const std::vector<Vec<Integer>>& c) { return IntMatrix::from_columns(c); }

TEST(SaturationTest, Examples) {
  EXPECT_EQ(saturation(cols({{2, 4}})), cols({{1, 2}}));
  IntMatrix plane = saturation(cols({{2, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(plane, cols({{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(saturation(IntMatrix::identity(2)), IntMatrix::identity(2));
}

TEST(SaturationTest, RankDeficientInputIsRejected) {
  try {
    saturation(cols({{1, 2, 3}, {2, 4, 6}}));
    FAIL() << "expected an error";
  } catch (const LatticeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
    EXPECT_STREQ(e.what(), "not full column rank");
  }
}

TEST(SaturationTest, IdempotentAndIndexLaw) {
  auto rng = testing::make_rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = testing::uniform(rng, 2, 5);
    std::size_t m = testing::uniform(rng, 1, n);
    IntMatrix b = testing::random_full_rank(rng, n, m, -9, 9);
    IntMatrix s = saturation(b);
    EXPECT_EQ(saturation(s), s);
    EXPECT_EQ(plucker_gcd(s), 1);
    PluckerCoordinates pb = plucker_coordinates(b);
    PluckerCoordinates ps = plucker_coordinates(s);
    // b's minors are +-g times those of its saturation
    int sign = 0;
    for (std::size_t i = 0; i < pb.minors.size(); ++i) {
      Integer scaled = pb.gcd * ps.minors[i];
      if (scaled == 0) {
        EXPECT_EQ(pb.minors[i], 0);
        continue;
      }
      int s_i = pb.minors[i] == scaled ? 1 : (pb.minors[i] == -scaled ? -1 : 0);
      ASSERT_NE(s_i, 0);
      if (sign == 0) sign = s_i;
      EXPECT_EQ(s_i, sign);
    }
    // every column of b is an integer combination of s
    RatMatrix coords = solve(gram_of(to_rational(s)), to_rational(s).transpose() * to_rational(b));
    EXPECT_NO_THROW(to_integer(coords));
    EXPECT_EQ(to_rational(s) * coords, to_rational(b));
  }
}

TEST(CompletionTest, Examples) {
  IntMatrix u = complete_to_unimodular(cols({{1, 2}}));
  EXPECT_EQ(u.column(0), (Vec<Integer>{1, 2}));
  EXPECT_EQ(abs(integer_determinant(u)), 1);
  EXPECT_EQ(complete_to_unimodular(cols({{1, 0, 0}})).column(0), (Vec<Integer>{1, 0, 0}));
  IntMatrix u3 = complete_to_unimodular(cols({{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(abs(integer_determinant(u3)), 1);
  EXPECT_EQ(u3.select_columns(0, 2), cols({{1, 0, 0}, {0, 1, 0}}));
}

TEST(CompletionTest, NonPrimitiveInputIsRejected) {
  EXPECT_THROW(complete_to_unimodular(cols({{2, 4}})), LatticeError);
}

TEST(CompletionTest, RandomPrimitiveInputs) {
  auto rng = testing::make_rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = testing::uniform(rng, 2, 5);
    std::size_t m = testing::uniform(rng, 1, n);
    IntMatrix s = saturation(testing::random_full_rank(rng, n, m, -9, 9));
    IntMatrix u = complete_to_unimodular(s);
    EXPECT_EQ(abs(integer_determinant(u)), 1);
    EXPECT_EQ(u.select_columns(0, m), s);
  }
}

TEST(PluckerTest, Examples) {
  PluckerCoordinates p = plucker_coordinates(cols({{2, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(p.minors, (std::vector<Integer>{4, 0, 0}));
  EXPECT_EQ(p.gcd, 4);
  PluckerCoordinates q = plucker_coordinates(cols({{2, 4}}));
  EXPECT_EQ(q.minors, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(q.gcd, 2);
  EXPECT_EQ(plucker_gcd(cols({{1, 0, 0, 0}, {0, 1, 0, 0}})), 1);
  EXPECT_EQ(plucker_gcd(cols({{1, 2, 3}, {2, 4, 6}})), 0);
}

TEST(PluckerTest, MinorOrderIsLexicographic) {
  // rows (0,1), (0,2), (1,2) of [[1,4],[2,5],[3,6]]
  PluckerCoordinates p = plucker_coordinates(cols({{1, 2, 3}, {4, 5, 6}}));
  EXPECT_EQ(p.minors, (std::vector<Integer>{-3, -6, -3}));
  EXPECT_EQ(p.gcd, 3);
}

TEST(HermiteTest, TransformIsUnimodular) {
  auto rng = testing::make_rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = testing::uniform(rng, 1, 5), m = testing::uniform(rng, 1, 5);
    IntMatrix a(n, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) a(i, j) = testing::uniform(rng, -6, 6);
    HermiteForm h = column_hermite(a);
    EXPECT_EQ(a * h.transform, h.hnf);
    EXPECT_EQ(abs(integer_determinant(h.transform)), 1);
    IntMatrix k = integer_kernel(a);
    EXPECT_EQ(k.cols(), m - h.rank);
    if (k.cols() > 0) EXPECT_EQ(a * k, IntMatrix(n, k.cols()));
  }
}

TEST(DeterminantTest, Examples) {
  auto id = det_lattice(QuadMatrix::identity(2));
  EXPECT_EQ(id.det_squared, QuadScalar(1));
  auto hex = det_lattice(testing::hexagonal_basis());
  EXPECT_EQ(hex.det_squared, frac(3, 4));
  EXPECT_NEAR(hex.det, std::sqrt(3.0) / 2, 1e-15);
  auto line = det_lattice(integer_cast<QuadScalar>(cols({{2, 4}})));
  EXPECT_EQ(line.det_squared, QuadScalar(20));
  EXPECT_NEAR(line.det, 2 * std::sqrt(5.0), 1e-14);
  EXPECT_THROW(det_lattice(integer_cast<QuadScalar>(cols({{1, 2}, {2, 4}}))), LatticeError);
  EXPECT_THROW(det_lattice(RealMatrix::from_columns({{1.0, 2.0}, {2.0, 4.0}})), LatticeError);
}

TEST(ProjectionTest, Examples) {
  RatMatrix e1 = orthogonal_projection(RatMatrix::from_columns({{1, 0}}));
  EXPECT_EQ(e1, RatMatrix::from_rows({{1, 0}, {0, 0}}));
  RatMatrix line = orthogonal_projection(RatMatrix::from_columns({{1, 2}}));
  EXPECT_EQ(line, RatMatrix::from_rows({{Rational(1, 5), Rational(2, 5)}, {Rational(2, 5), Rational(4, 5)}}));
  EXPECT_EQ(orthogonal_projection(RatMatrix::identity(3)), RatMatrix::identity(3));
}

TEST(ProjectionTest, IdempotentAndSymmetricExactly) {
  auto rng = testing::make_rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = testing::uniform(rng, 2, 5), m = testing::uniform(rng, 1, n);
    RatMatrix b = to_rational(testing::random_full_rank(rng, n, m, -9, 9));
    RatMatrix rho = orthogonal_projection(b);
    EXPECT_EQ(rho * rho, rho);
    EXPECT_EQ(rho.transpose(), rho);
    EXPECT_EQ(rho * b, b);
  }
}

TEST(UnimodularInverseTest, RoundTrip) {
  auto rng = testing::make_rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix u = testing::random_unimodular(rng, 4, 12);
    EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(4));
  }
}

}  // namespace
}  // namespace latext
