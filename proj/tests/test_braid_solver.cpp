// Copyright 2026 The parabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "parabraid/braid_solver.hpp"

namespace parabraid {
namespace {

SolverResult run(int d, int restarts = 2000, std::uint64_t seed = 20150101, int jobs = 1) {
  SolverConfig cfg;
  cfg.d = d;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.jobs = jobs;
  return solve_all(cfg);
}

std::vector<CoefficientVector> nontrivial(const SolverResult& r) {
  std::vector<CoefficientVector> out;
  for (const auto& c : r.clusters) {
    if (!c.trivial) {
      out.push_back(c.representative);
    }
  }
  return out;
}

TEST(Jacobian, MatchesCentralDifferences) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 3; ++t) {
      Eigen::VectorXd x(2 * d);
      for (int i = 0; i < 2 * d; ++i) {
        x(i) = g(rng);
      }
      const Eigen::MatrixXd jac = constraint_jacobian(detail::from_real(d, x));
      ASSERT_EQ(jac.rows(), detail::residual_size(d));
      ASSERT_EQ(jac.cols(), 2 * d);
      constexpr double h = 1e-6;
      for (int i = 0; i < 2 * d; ++i) {
        Eigen::VectorXd xp = x;
        Eigen::VectorXd xm = x;
        xp(i) += h;
        xm(i) -= h;
        const Eigen::VectorXd fd = (constraint_residual(detail::from_real(d, xp)) -
                                    constraint_residual(detail::from_real(d, xm))) /
                                   (2.0 * h);
        EXPECT_LT((jac.col(i) - fd).cwiseAbs().maxCoeff(), 1e-6 * (1.0 + fd.cwiseAbs().maxCoeff()))
            << "d=" << d << " column " << i;
      }
    }
  }
}

TEST(Residual, StacksComponents) {
  const auto c = fzc_coefficients({3, 1, Sign::plus});
  EXPECT_LT(constraint_residual(c).cwiseAbs().maxCoeff(), 1e-12);
  const CoefficientVector off(3, {1.0, 0.5, 0.0});
  EXPECT_NEAR(constraint_residual(off).cwiseAbs().maxCoeff(),
              std::max(unitarity_residual(off), yang_baxter_residual(off)), 1e-12);
}

TEST(Minimize, ConvergesFromNearbyPoint) {
  Eigen::VectorXd x = detail::to_real(fzc_coefficients({5, 2, Sign::minus}));
  x(1) += 0.05;
  x(7) -= 0.03;
  const auto c = detail::from_real(5, minimize_constraints(5, x, 200));
  EXPECT_LT(std::max(unitarity_residual(c), yang_baxter_residual(c)), 1e-12);
}

TEST(Solver, QubitHasTwoSolutions) {
  const auto r = run(2);
  const auto sols = nontrivial(r);
  ASSERT_EQ(sols.size(), 2u);
  const CoefficientVector a(2, {1.0, Complex(0.0, 1.0)});
  const CoefficientVector b(2, {1.0, Complex(0.0, -1.0)});
  for (const auto& s : sols) {
    EXPECT_LT(std::min(s.distance(a), s.distance(b)), 1e-6) << s.to_string();
  }
  EXPECT_GT(sols[0].distance(sols[1]), 1.0);
  const bool trivial_seen = std::any_of(r.clusters.begin(), r.clusters.end(), [](const auto& c) { return c.trivial; });
  EXPECT_TRUE(trivial_seen);
  EXPECT_EQ(r.converged + r.rejected, 2000);
}

TEST(Solver, QutritMatchesTable) {
  const auto r = run(3);
  const auto sols = nontrivial(r);
  ASSERT_EQ(sols.size(), 6u);
  for (const auto& row : qutrit_solution_table()) {
    const bool found = std::any_of(sols.begin(), sols.end(), [&](const auto& s) { return s.distance(row) < 1e-6; });
    EXPECT_TRUE(found) << row.to_string();
  }
  for (const auto& cl : r.clusters) {
    EXPECT_EQ(cl.manifold_dim, 0);
    EXPECT_LE(cl.max_internal_distance, 1e-6);
  }
  // The twist and conjugate-reverse maps connect all six.
  std::set<int> orbits;
  for (const auto& cl : r.clusters) {
    if (!cl.trivial) {
      orbits.insert(cl.orbit);
    }
  }
  EXPECT_EQ(orbits.size(), 1u);
}

TEST(Solver, QutritStableUnderMoreRestartsAndSeeds) {
  EXPECT_EQ(run(3, 4000).nontrivial_count(), 6);
  EXPECT_EQ(run(3, 2000, 99).nontrivial_count(), 6);
}

TEST(Solver, QuquartClustersLieOnFamily) {
  const auto r = run(4, 400);
  const auto sols = nontrivial(r);
  ASSERT_FALSE(sols.empty());
  for (const auto& cl : r.clusters) {
    if (cl.trivial) {
      continue;
    }
    EXPECT_EQ(cl.manifold_dim, 1) << cl.representative.to_string();
    // Distance to the family: c0 = 1 after gauge fixing, phi read off c1.
    const auto& c = cl.representative;
    const double phi = std::arg(c[1]);
    const double dist = std::min(c.distance(d4_family(phi, Sign::plus)), c.distance(d4_family(phi, Sign::minus)));
    EXPECT_LT(dist, 1e-6) << c.to_string();
  }
}

TEST(Solver, QuintFindsTheTenQuadraticSolutions) {
  const auto r = run(5, 1000);
  const auto sols = nontrivial(r);
  EXPECT_EQ(sols.size(), 10u);
  for (int k = 0; k < 5; ++k) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      const auto ref = gauge_fix(fzc_coefficients({5, k, s})).c;
      EXPECT_TRUE(std::any_of(sols.begin(), sols.end(), [&](const auto& x) { return x.distance(ref) < 1e-6; }));
    }
  }
}

TEST(Solver, IndependentOfThreadCount) {
  const auto a = solver_report_json(run(3, 300, 7, 1));
  const auto b = solver_report_json(run(3, 300, 7, 3));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Solver, ManifoldDimensionRejectsNonSolutions) {
  EXPECT_THROW(manifold_dimension(CoefficientVector(3, {1.0, 1.0, 1.0})), std::invalid_argument);
  EXPECT_EQ(manifold_dimension(fzc_coefficients({3, 0, Sign::plus})), 0);
  EXPECT_EQ(manifold_dimension(d4_family(0.4, Sign::minus)), 1);
}

TEST(Solver, ConfigValidation) {
  SolverConfig cfg;
  cfg.d = 7;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.d = 3;
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.restarts = 10;
  cfg.tolerance = 1e-3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.tolerance = 1e-9;
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Solver, ReportJson) {
  const auto j = solver_report_json(run(2, 50));
  EXPECT_EQ(j.at("d"), 2);
  EXPECT_EQ(j.at("restarts"), 50);
  EXPECT_EQ(j.at("converged").get<int>() + j.at("rejected").get<int>(), 50);
  for (const auto& c : j.at("clusters")) {
    EXPECT_TRUE(c.contains("manifold_dim"));
    EXPECT_LE(c.at("yang_baxter_residual").get<double>(), 1e-9);
  }
}

}  // namespace
}  // namespace parabraid
