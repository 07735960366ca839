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

#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "parabraid/braid_constraints.hpp"
#include "parabraid/cyclotomic_phase.hpp"

namespace parabraid {

struct SolverConfig {
  int d = 2;
  int restarts = 2000;
  double tolerance = 1e-9;      // max-norm residual for accepting a converged point
  double cluster_radius = 1e-6; // gauge-fixed max-norm distance
  std::uint64_t seed = 20150101;
  int max_iterations = 500;
  int jobs = 1;

  void validate() const {
    if (d < 2 || d > 6) {
      throw std::invalid_argument("SolverConfig: d must be in 2..6, got " + std::to_string(d));
    }
    if (restarts < 1) {
      throw std::invalid_argument("SolverConfig: restarts must be >= 1");
    }
    if (!(tolerance > 0.0) || !(tolerance < cluster_radius)) {
      throw std::invalid_argument("SolverConfig: need 0 < tolerance < cluster_radius");
    }
    if (jobs < 1) {
      throw std::invalid_argument("SolverConfig: jobs must be >= 1");
    }
  }
};

struct SolutionCluster {
  CoefficientVector representative;
  int count = 0;
  double max_internal_distance = 0.0;
  int manifold_dim = 0;
  int jacobian_null_dim = 0;
  bool trivial = false;
  int orbit = 0;  // index of the first cluster in the same twist / conjugate-reverse orbit
  double unitarity_residual = 0.0;
  double yang_baxter_residual = 0.0;
};

struct SolverResult {
  SolverConfig config;
  std::vector<SolutionCluster> clusters;
  int converged = 0;
  int rejected = 0;

  int nontrivial_count() const {
    return static_cast<int>(std::count_if(clusters.begin(), clusters.end(), [](const auto& c) { return !c.trivial; }));
  }
};

namespace detail {

// Real parametrisation x = (Re c_0..Re c_{d-1}, Im c_0..Im c_{d-1}).
inline CoefficientVector from_real(int d, const Eigen::VectorXd& x) {
  std::vector<Complex> c(static_cast<std::size_t>(d));
  for (int m = 0; m < d; ++m) {
    c[static_cast<std::size_t>(m)] = {x(m), x(d + m)};
  }
  return {d, std::move(c)};
}

inline Eigen::VectorXd to_real(const CoefficientVector& c) {
  const int d = c.d();
  Eigen::VectorXd x(2 * d);
  for (int m = 0; m < d; ++m) {
    x(m) = c[m].real();
    x(d + m) = c[m].imag();
  }
  return x;
}

inline int residual_size(int d) { return 2 * (d + d * d); }

}  // namespace detail

/// Stacked real residual: unitarity components r = 0..d-1, then Yang-Baxter components (k, m),
/// each as (Re, Im).
inline Eigen::VectorXd constraint_residual(const CoefficientVector& c) {
  const int d = c.d();
  Eigen::VectorXd out(detail::residual_size(d));
  int row = 0;
  for (const auto& v : unitarity_components(c)) {
    out(row++) = v.real();
    out(row++) = v.imag();
  }
  for (const auto& v : yang_baxter_components(c)) {
    out(row++) = v.real();
    out(row++) = v.imag();
  }
  return out;
}

/// Analytic Jacobian of constraint_residual with respect to (Re c, Im c).
inline Eigen::MatrixXd constraint_jacobian(const CoefficientVector& c) {
  const int d = c.d();
  const auto w = detail::omega_table(d);
  const auto wp = [&](long e) { return w[static_cast<std::size_t>(detail::mod(e, d))]; };
  const auto idx = [&](long m) { return static_cast<std::size_t>(detail::mod(m, d)); };
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(detail::residual_size(d), 2 * d);

  // Complex derivative of a residual with respect to Re c_j is `dre`, with respect to Im c_j is `dim`.
  const auto put = [&](int row, int j, Complex dre, Complex dim) {
    jac(row, j) += dre.real();
    jac(row + 1, j) += dre.imag();
    jac(row, d + j) += dim.real();
    jac(row + 1, d + j) += dim.imag();
  };

  const Complex i1(0.0, 1.0);
  int row = 0;
  // sum_m c_m conj(c_{m+r})
  for (int r = 0; r < d; ++r, row += 2) {
    for (int j = 0; j < d; ++j) {
      const Complex a = std::conj(c[j + r]);  // from c_m with m = j
      const Complex b = c[j - r];             // from conj(c_{m+r}) with m = j - r
      put(row, j, a + b, i1 * a - i1 * b);
    }
  }
  // Yang-Baxter components are holomorphic in c: d/dRe = D, d/dIm = i D.
  for (int k = 0; k < d; ++k) {
    for (int m = 0; m < d; ++m, row += 2) {
      std::vector<Complex> dc(static_cast<std::size_t>(d), 0.0);
      for (int r = 0; r < d; ++r) {
        const Complex wl = wp(static_cast<long>(m) * r);
        dc[idx(r)] += c[k - r] * c[m] * wl;
        dc[idx(k - r)] += c[r] * c[m] * wl;
        dc[idx(m)] += c[r] * c[k - r] * wl;
        const Complex wr = wp(static_cast<long>(k) * r);
        dc[idx(r)] -= c[k] * c[m - r] * wr;
        dc[idx(k)] -= c[r] * c[m - r] * wr;
        dc[idx(m - r)] -= c[r] * c[k] * wr;
      }
      for (int j = 0; j < d; ++j) {
        put(row, j, dc[static_cast<std::size_t>(j)], i1 * dc[static_cast<std::size_t>(j)]);
      }
    }
  }
  return jac;
}

/// Levenberg-Marquardt minimisation of |constraint_residual|^2 from x0.
inline Eigen::VectorXd minimize_constraints(int d, Eigen::VectorXd x, int max_iterations) {
  const auto cost_of = [d](const Eigen::VectorXd& v) { return constraint_residual(detail::from_real(d, v)).squaredNorm(); };
  double mu = 1e-3;
  double cost = cost_of(x);
  for (int it = 0; it < max_iterations; ++it) {
    const CoefficientVector c = detail::from_real(d, x);
    const Eigen::VectorXd r = constraint_residual(c);
    if (r.cwiseAbs().maxCoeff() < 1e-15) {
      break;
    }
    const Eigen::MatrixXd jac = constraint_jacobian(c);
    const Eigen::MatrixXd a = jac.transpose() * jac;
    const Eigen::VectorXd g = jac.transpose() * r;
    const Eigen::VectorXd diag = a.diagonal().cwiseMax(1e-12);
    bool stepped = false;
    Eigen::VectorXd step;
    while (mu < 1e12) {
      Eigen::MatrixXd damped = a;
      damped.diagonal() += mu * diag;
      step = damped.ldlt().solve(-g);
      const Eigen::VectorXd trial = x + step;
      const double trial_cost = cost_of(trial);
      if (trial_cost < cost) {
        x = trial;
        cost = trial_cost;
        mu = std::max(mu * 0.3, 1e-15);
        stepped = true;
        break;
      }
      mu *= 10.0;
    }
    if (!stepped || step.norm() <= 1e-16 * (1.0 + x.norm())) {
      break;
    }
  }
  return x;
}

namespace detail {

inline void require_solution(const CoefficientVector& c, double tol, const char* who) {
  const double res = std::max(unitarity_residual(c), yang_baxter_residual(c));
  if (res > tol) {
    throw std::invalid_argument(std::string(who) + ": input is not a solution (residual " + std::to_string(res) + ")");
  }
}

}  // namespace detail

/// Number of Jacobian singular values below sqrt(tol), minus one for the global-phase direction.
inline int jacobian_null_dimension(const CoefficientVector& c, double tol = 1e-9) {
  detail::require_solution(c, tol, "jacobian_null_dimension");
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraint_jacobian(c));
  const auto& s = svd.singularValues();
  const long null = static_cast<long>((s.array() < std::sqrt(tol)).count()) + (2L * c.d() - s.size());
  return static_cast<int>(std::max(0L, null - 1));
}

/// Local dimension of the solution set through c beyond the global-phase direction.
///
/// The Jacobian null space bounds it from above and is exact at regular points. When the bound
/// exceeds one, every null direction is followed a step of 1e-3 and projected back onto the
/// solution set; the rank of the gauge-fixed displacements is the dimension.
inline int manifold_dimension(const CoefficientVector& c, double tol = 1e-9) {
  detail::require_solution(c, tol, "manifold_dimension");
  const int d = c.d();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraint_jacobian(c), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double threshold = std::sqrt(tol);
  std::vector<Eigen::VectorXd> null;
  for (int k = 0; k < 2 * d; ++k) {
    if (k >= s.size() || s(k) < threshold) {
      null.push_back(svd.matrixV().col(k));
    }
  }
  const int bound = std::max(0, static_cast<int>(null.size()) - 1);
  if (bound <= 1) {
    return bound;
  }
  constexpr double kStep = 1e-3;
  const Eigen::VectorXd origin = detail::to_real(gauge_fix(c).c);
  Eigen::MatrixXd displacements(2 * d, static_cast<Eigen::Index>(2 * null.size()));
  Eigen::Index col = 0;
  for (const auto& v : null) {
    for (double sign : {1.0, -1.0}) {
      const Eigen::VectorXd x = minimize_constraints(d, origin + sign * kStep * v, 200);
      displacements.col(col++) = detail::to_real(gauge_fix(detail::from_real(d, x)).c) - origin;
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> dsvd(displacements);
  const int rank = static_cast<int>((dsvd.singularValues().array() > 0.2 * kStep).count());
  return std::min(rank, bound);
}

namespace detail {

struct RestartOutcome {
  std::optional<CoefficientVector> solution;  // gauge-fixed, residual within tolerance
};

inline RestartOutcome run_restart(const SolverConfig& cfg, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed & 0xffffffffu), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d = cfg.d;
  Eigen::VectorXd x(2 * d);
  const double radius = std::sqrt(static_cast<double>(d));
  for (int m = 0; m < d; ++m) {
    const double rho = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    x(m) = rho * std::cos(theta);
    x(d + m) = rho * std::sin(theta);
  }
  x = minimize_constraints(d, x, cfg.max_iterations);
  const CoefficientVector c = gauge_fix(from_real(d, x)).c;
  if (std::max(unitarity_residual(c), yang_baxter_residual(c)) > cfg.tolerance) {
    return {};
  }
  return {c};
}

}  // namespace detail

/// Random-restart search for all solutions of the unitarity and Yang-Baxter constraints.
///
/// Restarts are independent (each seeded from (seed, restart index)) and may run on several
/// threads; clustering is one sequential pass in restart order, so the output depends only on
/// the configuration.
inline SolverResult solve_all(const SolverConfig& cfg) {
  cfg.validate();
  std::vector<detail::RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  const int workers = std::min(cfg.jobs, cfg.restarts);
  if (workers <= 1) {
    for (int i = 0; i < cfg.restarts; ++i) {
      outcomes[static_cast<std::size_t>(i)] = detail::run_restart(cfg, i);
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < cfg.restarts; i += workers) {
          outcomes[static_cast<std::size_t>(i)] = detail::run_restart(cfg, i);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  SolverResult result{cfg, {}, 0, 0};
  std::vector<std::vector<CoefficientVector>> members;
  for (const auto& o : outcomes) {
    if (!o.solution) {
      ++result.rejected;
      continue;
    }
    ++result.converged;
    const CoefficientVector& c = *o.solution;
    bool placed = false;
    for (std::size_t k = 0; k < result.clusters.size(); ++k) {
      if (result.clusters[k].representative.distance(c) <= cfg.cluster_radius) {
        ++result.clusters[k].count;
        members[k].push_back(c);
        placed = true;
        break;
      }
    }
    if (!placed) {
      result.clusters.push_back({c, 1});
      members.push_back({c});
    }
  }

  for (std::size_t k = 0; k < result.clusters.size(); ++k) {
    auto& cl = result.clusters[k];
    const auto& mem = members[k];
    for (std::size_t a = 0; a < mem.size(); ++a) {
      for (std::size_t b = a + 1; b < mem.size(); ++b) {
        cl.max_internal_distance = std::max(cl.max_internal_distance, mem[a].distance(mem[b]));
      }
    }
    cl.trivial = is_trivial(cl.representative, cfg.cluster_radius);
    cl.manifold_dim = manifold_dimension(cl.representative, cfg.tolerance);
    cl.jacobian_null_dim = jacobian_null_dimension(cl.representative, cfg.tolerance);
    cl.unitarity_residual = unitarity_residual(cl.representative);
    cl.yang_baxter_residual = yang_baxter_residual(cl.representative);
  }

  // Orbit grouping under the twist and conjugate-reverse maps.
  std::vector<int> parent(result.clusters.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  for (std::size_t k = 0; k < result.clusters.size(); ++k) {
    const CoefficientVector& rep = result.clusters[k].representative;
    for (const auto& image : {apply_symmetry(rep, Twist{}), apply_symmetry(rep, ConjugateReverse{})}) {
      for (std::size_t j = 0; j < result.clusters.size(); ++j) {
        if (result.clusters[j].representative.distance(image) <= cfg.cluster_radius) {
          const int a = find(static_cast<int>(k));
          const int b = find(static_cast<int>(j));
          parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
          break;
        }
      }
    }
  }
  for (std::size_t k = 0; k < result.clusters.size(); ++k) {
    result.clusters[k].orbit = find(static_cast<int>(k));
  }
  return result;
}

inline nlohmann::json solver_report_json(const SolverResult& r) {
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& c : r.clusters) {
    clusters.push_back({{"c", c.representative},
                        {"count", c.count},
                        {"manifold_dim", c.manifold_dim},
                        {"jacobian_null_dim", c.jacobian_null_dim},
                        {"trivial", c.trivial},
                        {"orbit", c.orbit},
                        {"max_internal_distance", c.max_internal_distance},
                        {"unitarity_residual", c.unitarity_residual},
                        {"yang_baxter_residual", c.yang_baxter_residual}});
  }
  return {{"d", r.config.d},
          {"seed", r.config.seed},
          {"restarts", r.config.restarts},
          {"converged", r.converged},
          {"rejected", r.rejected},
          {"nontrivial_clusters", r.nontrivial_count()},
          {"clusters", clusters}};
}

}  // namespace parabraid
