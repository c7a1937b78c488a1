#include <gtest/gtest.h>

#include "support.hpp"

namespace latext {
namespace {

// Lattices audited by other tests in this process must satisfy both
// classical inequalities; a direct sweep keeps this meaningful when run alone.
TEST(ClassicalInequalityTest, SweepAndReport) {
  auto rng = testing::make_rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = testing::uniform(rng, 1, 5);
    IntMatrix b = testing::random_full_rank(rng, n, n, -7, 7);
    testing::audit(ExactLattice(integer_cast<QuadScalar>(b)), "audit_test");
  }
  testing::audit(ExactLattice(testing::hexagonal_basis()), "hexagonal");
  testing::audit(RealLattice(RealMatrix::identity(6)), "Z^6");
  const auto& auditor = testing::Auditor::instance();
  EXPECT_GE(auditor.count(), 202u);
  for (const auto& v : auditor.violations()) ADD_FAILURE() << v;
}

}  // namespace
}  // namespace latext
