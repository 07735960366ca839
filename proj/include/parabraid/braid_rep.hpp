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
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parabraid/braid_constraints.hpp"
#include "parabraid/cyclotomic_phase.hpp"
#include "parabraid/parafermion_algebra.hpp"
#include "parabraid/qudit_linalg.hpp"

namespace parabraid {

/// sigma_index^exponent, exponent in {+1, -1}.
struct BraidGenerator {
  int index;
  int exponent = 1;

  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
};

/// A braid as a sequence of generators in time order: entry 0 acts first, so the unitary is
/// U[last] ... U[1] U[0].
///
/// The text form is operator notation, read like a product of matrices: "4 3" is U_4 U_3, in
/// which U_3 acts first. "-i" denotes the inverse generator, '|' and ',' are ignored.
class BraidWord {
 public:
  BraidWord() = default;

  static BraidWord from_time_order(std::vector<BraidGenerator> generators) {
    for (const auto& g : generators) {
      if (g.index < 1 || (g.exponent != 1 && g.exponent != -1)) {
        throw std::invalid_argument("BraidWord: invalid generator " + std::to_string(g.index) + "^" +
                                    std::to_string(g.exponent));
      }
    }
    BraidWord w;
    w.generators_ = std::move(generators);
    return w;
  }

  /// Parses operator notation, e.g. "4 3 | 5 4 6 5 | 5 4 6 5 | -3 -4".
  static BraidWord parse(std::string_view text) {
    std::string cleaned(text);
    std::replace_if(
        cleaned.begin(), cleaned.end(), [](char ch) { return ch == '|' || ch == ','; }, ' ');
    std::istringstream in(cleaned);
    std::vector<BraidGenerator> operator_order;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("BraidWord::parse: bad token '" + token + "'");
      }
      if (used != token.size() || value == 0) {
        throw std::invalid_argument("BraidWord::parse: bad token '" + token + "'");
      }
      operator_order.push_back({std::abs(value), value > 0 ? 1 : -1});
    }
    std::reverse(operator_order.begin(), operator_order.end());
    return from_time_order(std::move(operator_order));
  }

  const std::vector<BraidGenerator>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }

  int max_index() const {
    int m = 0;
    for (const auto& g : generators_) {
      m = std::max(m, g.index);
    }
    return m;
  }

  BraidWord inverse() const {
    std::vector<BraidGenerator> out(generators_.rbegin(), generators_.rend());
    for (auto& g : out) {
      g.exponent = -g.exponent;
    }
    return from_time_order(std::move(out));
  }

  /// Operator product: (a * b) applies b first.
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    std::vector<BraidGenerator> out = b.generators_;
    out.insert(out.end(), a.generators_.begin(), a.generators_.end());
    return from_time_order(std::move(out));
  }

  /// k-th power; negative k gives powers of the inverse.
  BraidWord pow(int k) const {
    const BraidWord base = k < 0 ? inverse() : *this;
    BraidWord out;
    for (int i = 0; i < std::abs(k); ++i) {
      out = base * out;
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (auto it = generators_.rbegin(); it != generators_.rend(); ++it) {
      if (!s.empty()) {
        s += ' ';
      }
      s += std::to_string(it->exponent * it->index);
    }
    return s;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidGenerator> generators_;
};

/// Canonical braids on two quadruplets {1,2,3,4} and {5,6,7,8}.
namespace braid_words {

/// U_1 U_2 U_1, the logical Fourier gate.
inline BraidWord fourier() { return BraidWord::parse("1 2 1"); }
/// V = U_4 U_3
inline BraidWord v() { return BraidWord::parse("4 3"); }
/// W = U_5 U_4 U_6 U_5
inline BraidWord w() { return BraidWord::parse("5 4 6 5"); }
/// S = V W^2 V^dagger
inline BraidWord s() { return v() * w().pow(2) * v().inverse(); }
/// T = (U_4 U_3 U_5 U_4)^2
inline BraidWord t() { return BraidWord::parse("4 3 5 4").pow(2); }

/// Text forms of the words above, exactly as they read as operator products.
inline constexpr std::string_view kFourierText = "1 2 1";
inline constexpr std::string_view kSText = "4 3 | 5 4 6 5 | 5 4 6 5 | -3 -4";
inline constexpr std::string_view kTText = "4 3 5 4 | 4 3 5 4";

}  // namespace braid_words

/// Braid operators U_i = d^(-1/2) sum_m c_m Lambda_i^m on a parafermion system.
class BraidRepresentation {
 public:
  BraidRepresentation(std::shared_ptr<const ParafermionSystem> sys, CoefficientVector c,
                      std::optional<FZCParams> fzc = std::nullopt, double unitarity_tol = 1e-9)
      : sys_(std::move(sys)), c_(std::move(c)), fzc_(fzc) {
    if (!sys_) {
      throw std::invalid_argument("BraidRepresentation: null parafermion system");
    }
    if (c_.d() != sys_->d()) {
      throw std::invalid_argument("BraidRepresentation: coefficient dimension " + std::to_string(c_.d()) +
                                  " does not match system dimension " + std::to_string(sys_->d()));
    }
    const double res = unitarity_residual(c_);
    if (res > unitarity_tol) {
      throw std::invalid_argument("BraidRepresentation: coefficients violate the unitarity constraint (residual " +
                                  std::to_string(res) + ")");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(c_.d()));
    for (int i = 1; i < sys_->num_modes(); ++i) {
      const DenseOperator& lam = sys_->parity(i);
      DenseOperator u = DenseOperator::zero(sys_->qudits());
      DenseOperator power = DenseOperator::identity(sys_->qudits());
      for (int m = 0; m < c_.d(); ++m) {
        u = u + (scale * c_[m]) * power;
        power = power * lam;
      }
      generators_.push_back(std::move(u));
    }
  }

  /// Representation from a quadratic-phase solution on n_pairs pairs.
  static BraidRepresentation fzc(int n_pairs, const FZCParams& params) {
    return {std::make_shared<const ParafermionSystem>(params.d, n_pairs), fzc_coefficients(params), params};
  }

  const ParafermionSystem& system() const { return *sys_; }
  std::shared_ptr<const ParafermionSystem> shared_system() const { return sys_; }
  const CoefficientVector& coefficients() const { return c_; }
  const std::optional<FZCParams>& fzc_params() const { return fzc_; }
  int num_generators() const { return static_cast<int>(generators_.size()); }

  /// U_i, 1 <= i <= 2n-1.
  const DenseOperator& generator(int i) const {
    if (i < 1 || i > num_generators()) {
      throw std::out_of_range("braid generator " + std::to_string(i) + " outside 1.." +
                              std::to_string(num_generators()));
    }
    return generators_[static_cast<std::size_t>(i - 1)];
  }

 private:
  std::shared_ptr<const ParafermionSystem> sys_;
  CoefficientVector c_;
  std::optional<FZCParams> fzc_;
  std::vector<DenseOperator> generators_;
};

inline const DenseOperator& build_braid_operator(const BraidRepresentation& rep, int i) { return rep.generator(i); }

/// Unitary of a braid word; inverse generators use U_i^dagger.
inline DenseOperator compose_braid(const BraidRepresentation& rep, const BraidWord& word) {
  if (word.max_index() > rep.num_generators()) {
    throw std::out_of_range("compose_braid: word uses generator " + std::to_string(word.max_index()) +
                            " but the system has " + std::to_string(rep.num_generators()));
  }
  Matrix u = Matrix::Identity(rep.system().qudits().dim(), rep.system().qudits().dim());
  for (const auto& g : word.generators()) {
    const Matrix& gen = rep.generator(g.index).matrix();
    if (g.exponent > 0) {
      u = gen * u;
    } else {
      u = gen.adjoint() * u;
    }
  }
  return {rep.system().qudits(), std::move(u)};
}

struct RepresentationReport {
  double unitarity = 0.0;
  double far_commutativity = 0.0;
  double yang_baxter = 0.0;
  double locality = 0.0;           // max |[U_i, gamma_j]| for j not in {i, i+1}
  double parity_conservation = 0.0;  // max |[U_i, Lambda_1 Lambda_3 ... Lambda_{2n-1}]|
  double max_residual() const {
    return std::max({unitarity, far_commutativity, yang_baxter, locality, parity_conservation});
  }
};

inline RepresentationReport check_representation(const BraidRepresentation& rep) {
  const ParafermionSystem& sys = rep.system();
  if (sys.n_pairs() < 2) {
    throw std::invalid_argument("check_representation: needs at least two pairs for the Yang-Baxter relation");
  }
  RepresentationReport out;
  const DenseOperator total = sys.total_parity();
  const int count = rep.num_generators();
  for (int i = 1; i <= count; ++i) {
    const DenseOperator& ui = rep.generator(i);
    out.unitarity = std::max(out.unitarity, ui.unitarity_residual());
    out.parity_conservation = std::max(out.parity_conservation, twisted_commutator_residual(ui, total));
    for (int j = 1; j <= sys.num_modes(); ++j) {
      if (j != i && j != i + 1) {
        out.locality = std::max(out.locality, twisted_commutator_residual(ui, sys.gamma(j)));
      }
    }
    for (int j = i + 1; j <= count; ++j) {
      const DenseOperator& uj = rep.generator(j);
      if (j - i > 1) {
        out.far_commutativity = std::max(out.far_commutativity, twisted_commutator_residual(ui, uj));
      } else {
        out.yang_baxter = std::max(out.yang_baxter, max_abs_diff(ui * uj * ui, uj * ui * uj));
      }
    }
  }
  return out;
}

/// Phase bookkeeping for one conjugation identity A -> lambda B.
struct PhaseLaw {
  CyclotomicPhase expected;
  std::optional<CyclotomicPhase> measured;  // lambda rounded into the phase ring
  double residual = INFINITY;               // max |A - expected B|
  bool holds() const { return measured.has_value() && *measured == expected; }
};

/// Images U gamma_i U^dagger and U gamma_{i+1} U^dagger. For quadratic-phase representations the
/// closed-form law gamma_i -> omega^(-r) gamma_{i+1}, gamma_{i+1} -> omega^(1-r) gamma_i^dagger gamma_{i+1}^2
/// is checked as well; for sign - the law is checked for conjugation by U_i^dagger, with r -> -r.
struct ConjugationAction {
  DenseOperator first_image;
  DenseOperator second_image;
  std::optional<PhaseLaw> first_law;
  std::optional<PhaseLaw> second_law;
};

inline ConjugationAction conjugation_action(const BraidRepresentation& rep, int i,
                                            double tol = kDefaultTolerance) {
  const ParafermionSystem& sys = rep.system();
  const DenseOperator& u = rep.generator(i);
  const DenseOperator& gi = sys.gamma(i);
  const DenseOperator& gj = sys.gamma(i + 1);
  ConjugationAction out{u * gi * u.adjoint(), u * gj * u.adjoint(), std::nullopt, std::nullopt};
  const auto& params = rep.fzc_params();
  if (!params) {
    return out;
  }
  const int d = sys.d();
  const bool plus = params->sign == Sign::plus;
  const int r = plus ? params->r : -params->r;
  const DenseOperator image_first = plus ? out.first_image : u.adjoint() * gi * u;
  const DenseOperator image_second = plus ? out.second_image : u.adjoint() * gj * u;

  const auto make_law = [&](const DenseOperator& image, const DenseOperator& target, CyclotomicPhase expected) {
    PhaseLaw law{expected, std::nullopt, max_abs_diff(image, expected.as_complex() * target)};
    if (auto lambda = equal_up_to_phase(image, target, tol)) {
      law.measured = CyclotomicPhase::nearest(d, *lambda, tol);
    }
    return law;
  };
  out.first_law = make_law(image_first, gj, CyclotomicPhase::omega_power(d, -r));
  out.second_law = make_law(image_second, gi.adjoint() * gj * gj, CyclotomicPhase::omega_power(d, 1 - r));
  return out;
}

/// Eigenvalues of U_i on the eigenbasis of Lambda_i: check_k = d^(-1/2) sum_m c_m omega^(km).
///
/// For sign + quadratic-phase coefficients the closed forms check_k = conj(c_k) check_0 and
/// check_0 = omega^(-r(r+d)/2 + d(1-d)/8) are evaluated exactly and compared.
struct DiagonalPhases {
  std::vector<Complex> check;
  double eigenbasis_residual = 0.0;  // max |U_i v - check_label v| over the parity eigenbasis
  std::optional<CyclotomicPhase> check0_closed_form;
  std::optional<std::vector<CyclotomicPhase>> exact;  // conj(c_k) check_0 in the phase ring
  double closed_form_residual = 0.0;                  // max_k |check_k - exact_k|
  bool check0_matches_ring = false;                    // numeric check_0 rounds to the closed form
};

inline std::vector<Complex> inverse_dft(const CoefficientVector& c) {
  const int d = c.d();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    Complex s = 0.0;
    for (int m = 0; m < d; ++m) {
      s += c[m] * CyclotomicPhase::omega_power(d, static_cast<std::int64_t>(k) * m).as_complex();
    }
    out[static_cast<std::size_t>(k)] = scale * s;
  }
  return out;
}

inline CyclotomicPhase fzc_check0(int d, int r) {
  // -r(r+d)/2 + d(1-d)/8 in units of omega^(1/8)
  return {d, -4LL * r * (r + d) + static_cast<std::int64_t>(d) * (1 - d)};
}

inline DiagonalPhases diagonal_phases(const BraidRepresentation& rep, int i) {
  const ParafermionSystem& sys = rep.system();
  const int d = sys.d();
  DiagonalPhases out;
  out.check = inverse_dft(rep.coefficients());

  // Eigenbasis of Lambda_i: Fourier states on qudit (i+1)/2 for odd i, the computational basis
  // (label k_q - k_{q+1}) for even i.
  const QuditSystem& qs = sys.qudits();
  Matrix basis;
  std::vector<int> labels(static_cast<std::size_t>(qs.dim()));
  if (i % 2 == 1) {
    const ParityEigenbasis eb = parity_eigenbasis(sys, i);
    basis = eb.vectors;
    for (Eigen::Index k = 0; k < qs.dim(); ++k) {
      labels[static_cast<std::size_t>(k)] = eb.label(k);
    }
  } else {
    basis = Matrix::Identity(qs.dim(), qs.dim());
    const int q = i / 2;
    for (Eigen::Index k = 0; k < qs.dim(); ++k) {
      labels[static_cast<std::size_t>(k)] = detail::mod(qs.digit(k, q) - qs.digit(k, q + 1), d);
    }
  }
  const Matrix image = rep.generator(i).matrix() * basis;
  for (Eigen::Index k = 0; k < qs.dim(); ++k) {
    const Complex lam = out.check[static_cast<std::size_t>(labels[static_cast<std::size_t>(k)])];
    out.eigenbasis_residual = std::max(out.eigenbasis_residual, (image.col(k) - lam * basis.col(k)).cwiseAbs().maxCoeff());
  }

  const auto& params = rep.fzc_params();
  if (params && params->sign == Sign::plus) {
    const int r = detail::mod(params->r, d);
    const CyclotomicPhase c0 = fzc_check0(d, r);
    out.check0_closed_form = c0;
    const auto phases = fzc_phases(*params);
    std::vector<CyclotomicPhase> exact;
    for (int k = 0; k < d; ++k) {
      exact.push_back(phases[static_cast<std::size_t>(k)].conj() * c0);
      out.closed_form_residual =
          std::max(out.closed_form_residual, std::abs(out.check[static_cast<std::size_t>(k)] - exact.back().as_complex()));
    }
    out.exact = std::move(exact);
    const auto rounded = CyclotomicPhase::nearest(d, out.check[0], 1e-12);
    out.check0_matches_ring = rounded.has_value() && *rounded == c0;
  }
  return out;
}

}  // namespace parabraid
