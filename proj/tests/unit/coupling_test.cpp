#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "risqaoa/coupling.hpp"
#include "risqaoa/errors.hpp"
#include "risqaoa/ising.hpp"
#include "risqaoa/oracle.hpp"
#include "test_support.hpp"

namespace risq {
namespace {

using testing::model_spec;
using testing::scenario;

double wavenumber() { return 2.0 * kPi * 30e9 / 299792458.0; }

TEST(Coupling, ModelIdsRoundTrip) {
  for (int id = 1; id <= 4; ++id) EXPECT_EQ(static_cast<int>(coupling_model_from_int(id)), id);
  EXPECT_THROW(coupling_model_from_int(0), ValidationError);
  EXPECT_THROW(coupling_model_from_int(5), ValidationError);
}

TEST(Coupling, DenseModelsOnFiveByFiveHaveEveryPair) {
  const auto geom = build_geometry(scenario(5, 5));
  EXPECT_EQ(build_model1(geom).edge_count(), 300u);
  EXPECT_EQ(build_model4(geom, model_spec(4)).instance.edge_count(), 300u);
}

TEST(Coupling, DefaultCutoffKeepsTheFourNeighbourLattice) {
  const auto geom = build_geometry(scenario(5, 5));
  EXPECT_EQ(build_model2(geom, model_spec(2)).edge_count(), 40u);
  EXPECT_EQ(build_model3(geom, model_spec(3)).edge_count(), 40u);
  for (const auto& e : build_model2(geom, model_spec(2)).edges) {
    EXPECT_NEAR(geom.distance(e.i, e.j), 5e-3, 1e-15);
  }
}

TEST(Coupling, CutoffOfOneAndAHalfPitchAlsoAdmitsDiagonals) {
  const auto geom = build_geometry(scenario(5, 5));
  auto spec = model_spec(2);
  spec.cutoff_m = 1.5 * 5e-3;
  // 40 lattice neighbours + 2 * 4 * 4 diagonal neighbours
  EXPECT_EQ(build_model2(geom, spec).edge_count(), 72u);
}

TEST(Coupling, CutoffBelowPitchLeavesNoEdges) {
  const auto geom = build_geometry(scenario(3, 3));
  auto spec = model_spec(3);
  spec.cutoff_m = 4e-3;
  const auto inst = build_model3(geom, spec);
  EXPECT_EQ(inst.edge_count(), 0u);
  EXPECT_TRUE(inst.J.isZero(0.0));
  EXPECT_THROW(normalize(inst), DegenerateInstanceError);
}

TEST(Coupling, CutoffSupportIsExact) {
  const auto geom = build_geometry(scenario(4, 4));
  for (int id : {2, 3}) {
    auto spec = model_spec(id);
    spec.cutoff_m = 7.2e-3;
    const auto inst = build_model(geom, spec).instance;
    for (Eigen::Index i = 0; i < inst.J.rows(); ++i) {
      for (Eigen::Index j = 0; j < inst.J.cols(); ++j) {
        if (inst.J(i, j) != 0.0) EXPECT_LT(geom.distance(i, j), 7.2e-3);
      }
    }
  }
}

TEST(Coupling, ModelOneMatchesCosineOfPhaseDifferenceOnTwoByTwo) {
  const auto geom = build_geometry(scenario(2, 2));
  const auto inst = build_model1(geom);
  const double k = wavenumber(), d = 5e-3, r = kPi / 180.0;
  auto phase = [&](double x, double y) {
    auto proj = [&](double th, double ph) {
      return k * (x * std::sin(th * r) * std::cos(ph * r) + y * std::sin(th * r) * std::sin(ph * r));
    };
    return proj(15, 100) - proj(60, 30);
  };
  const double phi[4] = {phase(0, 0), phase(0, d), phase(d, 0), phase(d, d)};
  ASSERT_EQ(inst.edge_count(), 6u);
  for (const auto& e : inst.edges) {
    EXPECT_NEAR(e.weight, std::cos(phi[e.i] - phi[e.j]), 1e-12) << e.i << "," << e.j;
  }
}

TEST(Coupling, AlignedPhasesGiveUnitCoupling) {
  auto cfg = scenario(3, 3);
  cfg.incident = {0.0, 0.0};
  cfg.target = {0.0, 0.0};
  const auto inst = build_model1(build_geometry(cfg));
  for (const auto& e : inst.edges) EXPECT_EQ(e.weight, 1.0);
}

TEST(Coupling, InverseDistancePenaltyUsesWavenumberByDefault) {
  const auto geom = build_geometry(scenario(2, 2));
  const auto m1 = build_model1(geom);
  const auto m2 = build_model2(geom, model_spec(2));
  const double penalty = m2.J(0, 1) - m1.J(0, 1);
  EXPECT_NEAR(penalty, wavenumber() / 5e-3, 1e-6);
  EXPECT_NEAR(penalty, 1.2575e5, 0.001e5);

  auto spec = model_spec(2);
  spec.inverse_distance_scale = 2.0;
  EXPECT_NEAR(build_model2(geom, spec).J(0, 1) - m1.J(0, 1), 2.0 / 5e-3, 1e-9);
}

TEST(Coupling, SphericalWaveWithZeroAlphaIsModelOneOnItsSupport) {
  const auto geom = build_geometry(scenario(4, 4));
  auto spec = model_spec(3);
  spec.alpha = 0.0;
  const auto m3 = build_model3(geom, spec);
  const auto m1 = build_model1(geom);
  ASSERT_EQ(m3.edge_count(), 24u);
  for (const auto& e : m3.edges) EXPECT_EQ(e.weight, m1.J(e.i, e.j));
}

TEST(Coupling, SphericalWaveTermIsNegativeAtHalfWavelength) {
  auto cfg = scenario(1, 2);
  const double lambda = 299792458.0 / 30e9;
  cfg.element_spacing_m = lambda / 2.0;
  const auto geom = build_geometry(cfg);
  auto spec = model_spec(3);
  spec.alpha = 0.3;
  const double term = build_model3(geom, spec).J(0, 1) - build_model1(geom).J(0, 1);
  EXPECT_NEAR(term, -0.3 / (lambda / 2.0), 1e-9);
}

TEST(Coupling, SphericalWaveMatrixMatchesRecomputationOnThreeByThree) {
  const auto geom = build_geometry(scenario(3, 3));
  auto spec = model_spec(3);
  spec.cutoff_m = 1.5 * 5e-3;
  const auto inst = build_model3(geom, spec);
  const double k = wavenumber();
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const double xi = (i / 3) * 5e-3, yi = (i % 3) * 5e-3;
      const double xj = (j / 3) * 5e-3, yj = (j % 3) * 5e-3;
      const double d = std::hypot(xi - xj, yi - yj);
      double expected = 0.0;
      if (i != j && d < 1.5 * 5e-3) {
        expected = std::cos(geom.ideal_phase[i] - geom.ideal_phase[j]) + 0.2 * std::cos(k * d) / d;
      }
      EXPECT_NEAR(inst.J(i, j), expected, 1e-9) << i << "," << j;
    }
  }
  EXPECT_EQ(inst.edge_count(), 20u);
}

TEST(Coupling, CoupledFarFieldWithoutCouplingIsModelOne) {
  const auto geom = build_geometry(scenario(5, 5));
  auto spec = model_spec(4);
  spec.alpha = 0.0;
  const auto m4 = build_model4(geom, spec).instance;
  const auto m1 = build_model1(geom);
  EXPECT_LT((m4.J - m1.J).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(m4.constant_offset, 25.0, 1e-12);
}

TEST(Coupling, CoupledFarFieldCostPlusOffsetIsBeamPower) {
  const auto geom = build_geometry(scenario(3, 3));
  const auto built = build_model4(geom, model_spec(4));
  const auto& inst = built.instance;
  const auto& B = built.beam->B;
  double best = -std::numeric_limits<double>::infinity();
  for (BasisIndex idx = 0; idx < 512; ++idx) {
    const auto spins = spins_from_index(idx, 9);
    std::complex<double> field = 0.0;
    for (int i = 0; i < 9; ++i) field += B(i) * static_cast<double>(spins[i]);
    const double power = std::norm(field);
    const double objective = evaluate_cost(inst, idx) + inst.constant_offset;
    EXPECT_NEAR(objective, power, 1e-9 * power) << idx;
    best = std::max(best, objective);
  }
  EXPECT_GT(best, inst.constant_offset);
}

TEST(Coupling, CoupledFarFieldBeamVectorMatchesDefinition) {
  const auto geom = build_geometry(scenario(2, 3));
  const auto built = build_model4(geom, model_spec(4));
  const double k = geom.wavenumber;
  using cd = std::complex<double>;
  for (int j = 0; j < 6; ++j) {
    cd sum = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double d = geom.distance(i, j);
      const cd c = i == j ? cd(1.0) : 0.2 * std::exp(cd(0.0, -k * d)) / d;
      sum += c * std::exp(cd(0.0, geom.phase_out[i]));
    }
    const cd expected = std::exp(cd(0.0, -geom.phase_in[j])) * sum;
    EXPECT_NEAR(std::abs(built.beam->B(j) - expected), 0.0, 1e-9);
  }
  EXPECT_TRUE(built.beam->coupling.isApprox(built.beam->coupling.transpose()));
}

TEST(Coupling, ZeroDiagonalOnlyShiftsCosts) {
  // Adding J_ii x_i^2 = J_ii to every configuration leaves all cost differences intact.
  const auto geom = build_geometry(scenario(3, 3));
  const auto built = build_model4(geom, model_spec(4));
  const Eigen::MatrixXd full = (built.beam->B * built.beam->B.adjoint()).real();
  for (BasisIndex a = 0; a < 512; a += 37) {
    for (BasisIndex b = 0; b < 512; b += 41) {
      auto quad = [&](BasisIndex idx) {
        const auto s = spins_from_index(idx, 9);
        Eigen::VectorXd x(9);
        for (int i = 0; i < 9; ++i) x(i) = s[i];
        return x.dot(full * x);
      };
      const double with_diag = quad(a) - quad(b);
      const double without = evaluate_cost(built.instance, a) - evaluate_cost(built.instance, b);
      EXPECT_NEAR(with_diag, without, 1e-9);
    }
  }
}

TEST(Coupling, ModelOneIsInvariantUnderSwappingIncidentAndTarget) {
  auto cfg = scenario(4, 4);
  const auto a = build_model1(build_geometry(cfg));
  std::swap(cfg.incident, cfg.target);
  const auto b = build_model1(build_geometry(cfg));
  EXPECT_LT((a.J - b.J).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Coupling, MatricesAreSymmetricWithZeroDiagonal) {
  const auto geom = build_geometry(scenario(3, 4));
  for (int id = 1; id <= 4; ++id) {
    const auto inst = build_model(geom, model_spec(id)).instance;
    EXPECT_TRUE(inst.J.isApprox(inst.J.transpose(), 0.0)) << id;
    EXPECT_TRUE(inst.J.diagonal().isZero(0.0)) << id;
    for (std::size_t e = 1; e < inst.edges.size(); ++e) {
      const auto& p = inst.edges[e - 1];
      const auto& q = inst.edges[e];
      EXPECT_TRUE(p.i < q.i || (p.i == q.i && p.j < q.j));
    }
  }
}

TEST(Coupling, NormalizeDividesByTotalAbsoluteCoupling) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2, 2);
  J(0, 1) = J(1, 0) = 5.0;
  const auto single = normalize(make_instance(J));
  EXPECT_EQ(single.J(0, 1), 1.0);
  EXPECT_EQ(*single.normalization_sum, 5.0);

  const auto geom = build_geometry(scenario(5, 5));
  for (int id = 1; id <= 4; ++id) {
    const auto raw = build_model(geom, model_spec(id)).instance;
    const auto norm = normalize(raw);
    double total = 0.0;
    for (const auto& e : norm.edges) total += std::abs(e.weight);
    EXPECT_NEAR(total, 1.0, 1e-12);
    ASSERT_EQ(norm.edges.size(), raw.edges.size());
    for (std::size_t e = 0; e < raw.edges.size(); ++e) {
      EXPECT_EQ(norm.edges[e].i, raw.edges[e].i);
      EXPECT_EQ(std::signbit(norm.edges[e].weight), std::signbit(raw.edges[e].weight));
    }
  }
}

TEST(Coupling, NormalizationPreservesTheOptimalSet) {
  const auto geom = build_geometry(scenario(3, 3));
  const auto raw = build_model1(geom);
  const auto a = exhaustive_search(to_minimization(raw));
  const auto b = exhaustive_search(to_minimization(normalize(raw)));
  EXPECT_EQ(a.optimal_set, b.optimal_set);
}

TEST(Coupling, MinimizationNegatesEverything) {
  const auto geom = build_geometry(scenario(3, 3));
  const auto inst = normalize(build_model4(geom, model_spec(4)).instance);
  const auto h = to_minimization(inst);
  EXPECT_EQ(h.sense, Sense::kMinimize);
  EXPECT_TRUE(h.J.isApprox(-inst.J, 0.0));
  EXPECT_EQ(h.constant_offset, -inst.constant_offset);
  for (BasisIndex idx = 0; idx < 512; idx += 17) {
    EXPECT_EQ(evaluate_cost(h, idx), -evaluate_cost(inst, idx));
  }
}

TEST(Coupling, EdgeListRoundTripsExactly) {
  const auto geom = build_geometry(scenario(3, 3));
  const auto inst = to_minimization(normalize(build_model3(geom, model_spec(3))));
  std::stringstream ss;
  write_edge_list(ss, inst);
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("n 9\n", 0), 0u);
  const auto back = read_edge_list(ss);
  ASSERT_EQ(back.n, 9u);
  ASSERT_EQ(back.edges.size(), inst.edges.size());
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    EXPECT_EQ(back.edges[e].i, inst.edges[e].i);
    EXPECT_EQ(back.edges[e].j, inst.edges[e].j);
    EXPECT_EQ(back.edges[e].weight, inst.edges[e].weight);
  }
  std::istringstream bad("n 3\n0 5 1.0\n");
  EXPECT_THROW(read_edge_list(bad), ValidationError);
}

TEST(Coupling, RejectsInvalidSpecs) {
  auto spec = model_spec(2);
  spec.cutoff_m = 0.0;
  EXPECT_THROW(validate(spec), ValidationError);
  spec = model_spec(3);
  spec.alpha = -0.1;
  EXPECT_THROW(validate(spec), ValidationError);
}

}  // namespace
}  // namespace risq
