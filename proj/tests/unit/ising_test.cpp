#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "risqaoa/errors.hpp"
#include "risqaoa/ising.hpp"
#include "test_support.hpp"

namespace risq {
namespace {

IsingInstance single_edge(double w) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2, 2);
  J(0, 1) = J(1, 0) = w;
  return make_instance(J);
}

TEST(Ising, BitSpinConventions) {
  const auto spins = spins_from_index(0b0101, 4);
  EXPECT_EQ(spins, (SpinConfig{-1, 1, -1, 1}));
  EXPECT_EQ(index_from_spins(spins), 0b0101u);
  EXPECT_EQ(bitstring_from_index(1, 3), "100");
  EXPECT_EQ(bitstring_from_index(0b110, 3), "011");
  EXPECT_EQ(index_from_bitstring("011"), 0b110u);
  EXPECT_EQ(complement(0b001, 3), 0b110u);
  EXPECT_THROW(index_from_bitstring("01a"), ValidationError);
  for (BasisIndex idx = 0; idx < 64; ++idx) {
    EXPECT_EQ(index_from_bitstring(bitstring_from_index(idx, 6)), idx);
    EXPECT_EQ(index_from_spins(spins_from_index(idx, 6)), idx);
  }
}

TEST(Ising, TwoSpinCosts) {
  const auto inst = single_edge(1.0);
  const SpinConfig up{1, 1}, anti{1, -1};
  EXPECT_EQ(evaluate_cost(inst, up), 2.0);
  EXPECT_EQ(evaluate_cost(inst, anti), -2.0);
  const SpinConfig wrong{1, 1, 1};
  EXPECT_THROW(evaluate_cost(inst, wrong), std::invalid_argument);
}

TEST(Ising, EmptyHamiltonianCostsNothing) {
  const auto inst = make_instance(Eigen::MatrixXd::Zero(4, 4));
  for (BasisIndex idx = 0; idx < 16; ++idx) EXPECT_EQ(evaluate_cost(inst, idx), 0.0);
  const auto one = build_cost_diagonal(make_instance(Eigen::MatrixXd::Zero(1, 1)));
  EXPECT_EQ(one.values, (std::vector<double>{0.0, 0.0}));
}

TEST(Ising, TwoQubitDiagonalUsesLsbFirstOrder) {
  const auto diag = build_cost_diagonal(single_edge(1.0));
  EXPECT_EQ(diag.values, (std::vector<double>{2.0, -2.0, -2.0, 2.0}));
}

TEST(Ising, BiasTermsEnterLinearly) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2, 2);
  const auto inst = make_instance(J, {0.5, -1.0});
  const auto diag = build_cost_diagonal(inst);
  EXPECT_EQ(diag.values, (std::vector<double>{-0.5, -1.5, 1.5, 0.5}));
}

TEST(Ising, DiagonalMatchesPerConfigurationEvaluationBitForBit) {
  for (int id = 1; id <= 4; ++id) {
    const auto inst = testing::hamiltonian(3, 3, id);
    const auto diag = build_cost_diagonal(inst);
    ASSERT_EQ(diag.dimension(), 512u);
    for (BasisIndex idx = 0; idx < 512; ++idx) {
      const auto spins = spins_from_index(idx, 9);
      EXPECT_EQ(diag.values[idx], evaluate_cost(inst, spins)) << idx;
    }
  }
}

TEST(Ising, LargeDiagonalSpotChecks) {
  const auto inst = testing::hamiltonian(4, 4, 4);
  const auto diag = build_cost_diagonal(inst);
  for (BasisIndex idx = 0; idx < diag.dimension(); idx += 97) {
    EXPECT_EQ(diag.values[idx], evaluate_cost(inst, idx));
  }
}

TEST(Ising, GlobalFlipSymmetryAndZeroTrace) {
  const auto inst = testing::hamiltonian(3, 4, 3);
  const auto diag = build_cost_diagonal(inst);
  const std::size_t n = 12;
  double sum = 0.0;
  for (BasisIndex idx = 0; idx < diag.dimension(); ++idx) {
    EXPECT_EQ(diag.values[idx], diag.values[complement(idx, n)]);
    sum += diag.values[idx];
  }
  EXPECT_NEAR(sum, 0.0, 1e-9 * static_cast<double>(diag.dimension()));
}

TEST(Ising, CostScaleBoundsEveryCost) {
  const auto inst = testing::hamiltonian(3, 3, 2);
  const auto diag = build_cost_diagonal(inst);
  const double bound = cost_scale(inst);
  const auto [lo, hi] = std::minmax_element(diag.values.begin(), diag.values.end());
  EXPECT_LE(*hi, bound);
  EXPECT_GE(*lo, -bound);
}

TEST(Ising, CapacityLimitIsEnforced) {
  const auto inst = testing::hamiltonian(3, 3, 1);
  EXPECT_THROW(build_cost_diagonal(inst, 8), CapacityError);
  EXPECT_NO_THROW(build_cost_diagonal(inst, 9));
}

}  // namespace
}  // namespace risq
