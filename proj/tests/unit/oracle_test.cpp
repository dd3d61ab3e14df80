#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "risqaoa/errors.hpp"
#include "risqaoa/oracle.hpp"
#include "test_support.hpp"

namespace risq {
namespace {

TEST(Oracle, TwoSpinsPreferAlignment) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2, 2);
  J(0, 1) = J(1, 0) = 1.0;
  const auto res = exhaustive_search(to_minimization(make_instance(J)));
  EXPECT_EQ(res.c_min, -2.0);
  EXPECT_EQ(res.c_max, 2.0);
  EXPECT_EQ(res.optimal_set, (std::vector<BasisIndex>{0b00, 0b11}));
  EXPECT_EQ(res.degeneracy(), 2u);
  EXPECT_TRUE(res.is_optimal(3));
  EXPECT_FALSE(res.is_optimal(1));
}

TEST(Oracle, FlatLandscapeIsFullyDegenerate) {
  const auto res = exhaustive_search(make_instance(Eigen::MatrixXd::Zero(5, 5)));
  EXPECT_EQ(res.degeneracy(), 32u);
  EXPECT_EQ(res.c_min, 0.0);
  EXPECT_EQ(res.c_max, 0.0);
}

TEST(Oracle, StrategiesAgreeBitForBit) {
  for (std::size_t rows : {2u, 3u}) {
    for (int id = 1; id <= 4; ++id) {
      const auto inst = testing::hamiltonian(rows, 3, id);
      OracleOptions direct;
      direct.strategy = EnumerationStrategy::kDirect;
      const auto a = exhaustive_search(inst);
      const auto b = exhaustive_search(inst, direct);
      EXPECT_EQ(a.c_min, b.c_min);
      EXPECT_EQ(a.c_max, b.c_max);
      EXPECT_EQ(a.optimal_set, b.optimal_set);
      EXPECT_EQ(a.tolerance, b.tolerance);
    }
  }
}

TEST(Oracle, GrayWalkAgreesWithDirectEvaluationOnSmallInstances) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 5u, 9u, 12u}) {
    const auto inst = testing::random_instance(n, rng);
    const auto walk = gray_code_costs(inst);
    ASSERT_EQ(walk.size(), std::size_t{1} << n);
    const double scale = cost_scale(inst);
    for (BasisIndex idx = 0; idx < walk.size(); ++idx) {
      EXPECT_NEAR(walk[idx], evaluate_cost(inst, idx), 1e-12 * scale) << n << ":" << idx;
    }
  }
}

TEST(Oracle, GrayWalkSpotChecksAtSixteenQubits) {
  const auto inst = testing::hamiltonian(4, 4, 4);
  const auto walk = gray_code_costs(inst);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<BasisIndex> pick(0, walk.size() - 1);
  for (int t = 0; t < 100000; ++t) {
    const BasisIndex idx = pick(rng);
    ASSERT_NEAR(walk[idx], evaluate_cost(inst, idx), 1e-12) << idx;
  }
}

TEST(Oracle, ExtremaEqualDiagonalExtrema) {
  for (int id = 1; id <= 4; ++id) {
    const auto inst = testing::hamiltonian(3, 4, id);
    const auto diag = build_cost_diagonal(inst);
    const auto res = exhaustive_search(inst);
    EXPECT_EQ(res.c_min, *std::min_element(diag.values.begin(), diag.values.end()));
    EXPECT_EQ(res.c_max, *std::max_element(diag.values.begin(), diag.values.end()));
  }
}

TEST(Oracle, OptimalSetIsSortedClosedUnderComplementAndExact) {
  for (int id = 1; id <= 4; ++id) {
    const auto inst = testing::hamiltonian(3, 3, id);
    const auto res = exhaustive_search(inst);
    EXPECT_TRUE(std::is_sorted(res.optimal_set.begin(), res.optimal_set.end()));
    EXPECT_GE(res.degeneracy(), 2u);
    EXPECT_EQ(res.degeneracy() % 2, 0u);
    for (BasisIndex z : res.optimal_set) {
      EXPECT_TRUE(res.is_optimal(complement(z, 9)));
      EXPECT_LE(evaluate_cost(inst, z) - res.c_min, res.tolerance);
    }
    // nothing outside the set is within tolerance
    for (BasisIndex idx = 0; idx < 512; ++idx) {
      if (!res.is_optimal(idx)) EXPECT_GT(evaluate_cost(inst, idx) - res.c_min, res.tolerance);
    }
    EXPECT_DOUBLE_EQ(res.tolerance, 1e-9 * (res.c_max - res.c_min));
  }
}

TEST(Oracle, DiagonalMinimumMatchesBruteForce) {
  const auto inst = testing::hamiltonian(3, 3, 1);
  double best = evaluate_cost(inst, BasisIndex{0});
  for (BasisIndex idx = 1; idx < 512; ++idx) best = std::min(best, evaluate_cost(inst, idx));
  EXPECT_EQ(exhaustive_search(inst).c_min, best);
}

TEST(Oracle, CapacityLimitIsEnforced) {
  const auto inst = testing::hamiltonian(3, 3, 1);
  OracleOptions opts;
  opts.max_qubits = 8;
  EXPECT_THROW(exhaustive_search(inst, opts), CapacityError);
  EXPECT_THROW(gray_code_costs(testing::hamiltonian(3, 7, 1)), CapacityError);
}

}  // namespace
}  // namespace risq
