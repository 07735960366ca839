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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "parabraid/cyclotomic_phase.hpp"
#include "parabraid/qudit_linalg.hpp"

namespace parabraid {

namespace detail {

// Sparse view of a monomial matrix: column c maps to row perm[c] with amplitude phase[c].
struct Monomial {
  std::vector<Eigen::Index> perm;
  std::vector<Complex> phase;

  static Monomial from_dense(const DenseOperator& op, double tol = 1e-12) {
    if (!op.is_monomial(tol)) {
      throw std::logic_error("operator is not monomial");
    }
    Monomial m;
    const auto n = static_cast<std::size_t>(op.dim());
    m.perm.resize(n);
    m.phase.resize(n);
    for (Eigen::Index c = 0; c < op.dim(); ++c) {
      Eigen::Index r = 0;
      op.matrix().col(c).cwiseAbs().maxCoeff(&r);
      m.perm[static_cast<std::size_t>(c)] = r;
      m.phase[static_cast<std::size_t>(c)] = op(r, c);
    }
    return m;
  }

  static Monomial identity(std::size_t n) {
    Monomial m;
    m.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.perm[i] = static_cast<Eigen::Index>(i);
    }
    m.phase.assign(n, 1.0);
    return m;
  }

  // (this * other): apply other first.
  Monomial operator*(const Monomial& other) const {
    Monomial out;
    out.perm.resize(perm.size());
    out.phase.resize(perm.size());
    for (std::size_t c = 0; c < perm.size(); ++c) {
      const auto mid = static_cast<std::size_t>(other.perm[c]);
      out.perm[c] = perm[mid];
      out.phase[c] = phase[mid] * other.phase[c];
    }
    return out;
  }

  // max |this - s * other|; infinite when supports differ.
  double distance(const Monomial& other, Complex s = 1.0) const {
    double worst = 0.0;
    for (std::size_t c = 0; c < perm.size(); ++c) {
      if (perm[c] != other.perm[c]) {
        return INFINITY;
      }
      worst = std::max(worst, std::abs(phase[c] - s * other.phase[c]));
    }
    return worst;
  }
};

}  // namespace detail

/// 2n Z_d parafermions gamma_1..gamma_2n on n qudits through the Jordan-Wigner map
///
///   gamma_{2i-1} = (prod_{j<i} X_j) Z_i,   gamma_{2i} = omega^((d+1)/2) (prod_{j<=i} X_j) Z_i
///
/// together with the parity operators Lambda_i = omega^((d+1)/2) gamma_i gamma_{i+1}^dagger.
/// The defining relations are checked when the system is built.
class ParafermionSystem {
 public:
  ParafermionSystem(int d, int n_pairs) : qudits_(d, n_pairs) {
    const QuditSystem& sys = qudits_;
    const Complex prefactor = half_shift().as_complex();
    DenseOperator string = DenseOperator::identity(sys);
    for (int i = 1; i <= n_pairs; ++i) {
      const DenseOperator z = pauli_z(sys, i);
      gammas_.push_back(string * z);
      string = string * pauli_x(sys, i);
      gammas_.push_back(prefactor * (string * z));
    }
    for (int i = 1; i < num_modes(); ++i) {
      parities_.push_back(prefactor * (gamma(i) * gamma(i + 1).adjoint()));
    }
    validate();
  }

  int d() const { return qudits_.d(); }
  int n_pairs() const { return qudits_.n(); }
  int num_modes() const { return 2 * qudits_.n(); }
  const QuditSystem& qudits() const { return qudits_; }

  /// omega^((d+1)/2), the phase in the even-site operators and the parity prefactor.
  CyclotomicPhase half_shift() const { return CyclotomicPhase::omega_power(d(), d() + 1, 2); }

  /// gamma_j, 1 <= j <= 2n.
  const DenseOperator& gamma(int j) const {
    if (j < 1 || j > num_modes()) {
      throw std::out_of_range("gamma index " + std::to_string(j) + " outside 1.." + std::to_string(num_modes()));
    }
    return gammas_[static_cast<std::size_t>(j - 1)];
  }

  /// Lambda_i, 1 <= i <= 2n-1.
  const DenseOperator& parity(int i) const {
    if (i < 1 || i >= num_modes()) {
      throw std::out_of_range("parity index " + std::to_string(i) + " outside 1.." +
                              std::to_string(num_modes() - 1));
    }
    return parities_[static_cast<std::size_t>(i - 1)];
  }

  /// Lambda_1 Lambda_3 ... Lambda_{2n-1}
  DenseOperator total_parity() const {
    DenseOperator p = DenseOperator::identity(qudits_);
    for (int i = 1; i < num_modes(); i += 2) {
      p = p * parity(i);
    }
    return p;
  }

 private:
  // Checks monomial structure, gamma^d = 1 and the ordered exchange relation on the
  // sparse representation so large systems stay cheap.
  void validate() const {
    constexpr double tol = 1e-12;
    std::vector<detail::Monomial> g;
    for (const auto& op : gammas_) {
      if (!op.is_monomial(tol)) {
        throw std::logic_error("ParafermionSystem: gamma is not a unit-modulus monomial");
      }
      g.push_back(detail::Monomial::from_dense(op, tol));
    }
    const auto dim = static_cast<std::size_t>(qudits_.dim());
    const Complex omega = qudits_.omega();
    for (std::size_t j = 0; j < g.size(); ++j) {
      detail::Monomial power = detail::Monomial::identity(dim);
      for (int k = 0; k < d(); ++k) {
        power = power * g[j];
      }
      if (power.distance(detail::Monomial::identity(dim)) > tol) {
        throw std::logic_error("ParafermionSystem: gamma_" + std::to_string(j + 1) + "^d != 1");
      }
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        // gamma_j gamma_k = omega gamma_k gamma_j for j < k
        if ((g[j] * g[k]).distance(g[k] * g[j], omega) > tol) {
          throw std::logic_error("ParafermionSystem: exchange relation fails for gamma_" + std::to_string(j + 1) +
                                 ", gamma_" + std::to_string(k + 1));
        }
      }
    }
    for (const auto& op : parities_) {
      if (!op.is_monomial(tol)) {
        throw std::logic_error("ParafermionSystem: parity operator is not monomial");
      }
    }
  }

  QuditSystem qudits_;
  std::vector<DenseOperator> gammas_;
  std::vector<DenseOperator> parities_;
};

inline ParafermionSystem build_parafermions(int d, int n_pairs) { return {d, n_pairs}; }

inline const DenseOperator& parity(const ParafermionSystem& sys, int i) { return sys.parity(i); }

/// Residuals of the parafermion relations, checked with dense products.
struct ParafermionRelationReport {
  double unitarity = 0.0;
  double power = 0.0;     // max |gamma_j^d - 1|
  double exchange = 0.0;  // max |gamma_j gamma_k - omega^sgn(k-j) gamma_k gamma_j|
  int relations_checked = 0;
  double max_residual() const { return std::max({unitarity, power, exchange}); }
};

inline ParafermionRelationReport check_parafermion_relations(const ParafermionSystem& sys) {
  ParafermionRelationReport rep;
  const DenseOperator one = DenseOperator::identity(sys.qudits());
  const Complex omega = sys.qudits().omega();
  for (int j = 1; j <= sys.num_modes(); ++j) {
    rep.unitarity = std::max(rep.unitarity, sys.gamma(j).unitarity_residual());
    rep.power = std::max(rep.power, max_abs_diff(sys.gamma(j).pow(sys.d()), one));
    rep.relations_checked += 2;
    for (int k = j + 1; k <= sys.num_modes(); ++k) {
      rep.exchange = std::max(rep.exchange, twisted_commutator_residual(sys.gamma(j), sys.gamma(k), omega));
      ++rep.relations_checked;
    }
  }
  return rep;
}

/// Residuals of the parity-operator algebra: far pairs commute, neighbours pick up omega^sgn(j-i),
/// and every Lambda_i^d = 1.
struct ParityAlgebraReport {
  double far = 0.0;
  double adjacent = 0.0;
  double power = 0.0;
  int relations_checked = 0;
  double max_residual() const { return std::max({far, adjacent, power}); }
};

inline ParityAlgebraReport check_parity_algebra(const ParafermionSystem& sys) {
  ParityAlgebraReport rep;
  const DenseOperator one = DenseOperator::identity(sys.qudits());
  const Complex omega = sys.qudits().omega();
  const int count = sys.num_modes() - 1;
  for (int i = 1; i <= count; ++i) {
    rep.power = std::max(rep.power, max_abs_diff(sys.parity(i).pow(sys.d()), one));
    ++rep.relations_checked;
    for (int j = i + 1; j <= count; ++j) {
      if (j - i == 1) {
        rep.adjacent = std::max(rep.adjacent, twisted_commutator_residual(sys.parity(i), sys.parity(j), omega));
      } else {
        rep.far = std::max(rep.far, twisted_commutator_residual(sys.parity(i), sys.parity(j)));
      }
      ++rep.relations_checked;
    }
  }
  return rep;
}

/// |m> = d^(-1/2) sum_k omega^(mk) |k> on a single qudit.
inline Vector fourier_state(int d, int m) {
  Vector v(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    v(k) = scale * CyclotomicPhase::omega_power(d, static_cast<std::int64_t>(m) * k).as_complex();
  }
  return v;
}

/// Eigenbasis of an odd-indexed parity Lambda_{2q-1} = X_q^dagger.
///
/// Column k of `vectors` is the computational basis state k with qudit q replaced by the
/// Fourier state |m>, m = digit q of k; its eigenvalue is omega^m. The amplitude on the
/// component with k_q = 0 is real and positive.
struct ParityEigenbasis {
  int parity_index;
  int qudit;
  QuditSystem system;
  Matrix vectors;

  int label(Eigen::Index column) const { return system.digit(column, qudit); }
  Complex eigenvalue(Eigen::Index column) const {
    return CyclotomicPhase::omega_power(system.d(), label(column)).as_complex();
  }
};

inline ParityEigenbasis parity_eigenbasis(const ParafermionSystem& sys, int i) {
  if (i < 1 || i >= sys.num_modes()) {
    throw std::out_of_range("parity_eigenbasis: index " + std::to_string(i) + " out of range");
  }
  if (i % 2 == 0) {
    throw std::invalid_argument("parity_eigenbasis: only odd-indexed parities have the Fourier eigenbasis");
  }
  const int q = (i + 1) / 2;
  const int d = sys.d();
  Matrix local(d, d);
  for (int m = 0; m < d; ++m) {
    local.col(m) = fourier_state(d, m);
  }
  return {i, q, sys.qudits(), embed(sys.qudits(), q, local).matrix()};
}

}  // namespace parabraid
