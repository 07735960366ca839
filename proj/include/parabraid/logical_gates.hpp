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

#include <nlohmann/json.hpp>

#include <cmath>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabraid/braid_constraints.hpp"
#include "parabraid/braid_rep.hpp"
#include "parabraid/clifford_tools.hpp"
#include "parabraid/cyclotomic_phase.hpp"
#include "parabraid/parafermion_algebra.hpp"
#include "parabraid/qudit_linalg.hpp"

namespace parabraid {

/// Leakage above which a braid is not treated as a logical gate.
inline constexpr double kLeakageTolerance = 1e-10;

/// Tolerance for matching a restricted braid against the gate dictionary.
inline constexpr double kGateTolerance = 1e-9;

class LeakageError : public std::runtime_error {
 public:
  explicit LeakageError(double leakage)
      : std::runtime_error("braid leaves the computational subspace (leakage " + std::to_string(leakage) + ")"),
        leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

/// T(A) = E^dagger A E together with the leakage max|(1 - E E^dagger) A E|.
struct Restriction {
  DenseOperator logical;
  double leakage;
  bool preserves_subspace(double tol = kLeakageTolerance) const { return leakage <= tol; }
};

/// One or two logical qudits in parafermion quadruplets {1,2,3,4} and {5,6,7,8}.
///
/// |k>_L = |k>_1 (x) |d-k>_3 with |m>_i the Fourier eigenvectors of the odd parities, so the
/// code space is the joint eigenspace Lambda_1 Lambda_3 = 1 (and Lambda_5 Lambda_7 = 1).
/// Logical basis index is k_A d + k_B.
class Encoding {
 public:
  Encoding(int d, int n_logical)
      : logical_(d, check_logical(n_logical)),
        sys_(std::make_shared<const ParafermionSystem>(d, 2 * n_logical)),
        isometry_(Matrix::Zero(sys_->qudits().dim(), logical_.dim())) {
    for (Eigen::Index col = 0; col < logical_.dim(); ++col) {
      Vector v = Vector::Ones(1);
      for (int q = 1; q <= n_logical; ++q) {
        const int k = logical_.digit(col, q);
        v = kron(v, fourier_state(d, k));
        v = kron(v, fourier_state(d, -k));
      }
      isometry_.col(col) = v;
    }
  }

  int d() const { return logical_.d(); }
  int n_logical() const { return logical_.n(); }
  const QuditSystem& logical_system() const { return logical_; }
  const ParafermionSystem& parafermions() const { return *sys_; }
  std::shared_ptr<const ParafermionSystem> shared_parafermions() const { return sys_; }
  const Matrix& isometry() const { return isometry_; }

  Restriction restrict(const DenseOperator& a) const {
    if (a.dim() != sys_->qudits().dim()) {
      throw std::invalid_argument("Encoding::restrict: operator dimension " + std::to_string(a.dim()) +
                                  " does not match the encoding's space " + std::to_string(sys_->qudits().dim()));
    }
    const Matrix ae = a.matrix() * isometry_;
    Matrix logical = isometry_.adjoint() * ae;
    const double leak = (ae - isometry_ * logical).cwiseAbs().maxCoeff();
    return {DenseOperator(logical_, std::move(logical)), leak};
  }

  /// Representation on this encoding's parafermions.
  BraidRepresentation representation(const FZCParams& params) const {
    if (params.d != d()) {
      throw std::invalid_argument("Encoding::representation: dimension mismatch");
    }
    return {sys_, fzc_coefficients(params), params};
  }
  BraidRepresentation representation(const CoefficientVector& c) const { return {sys_, c}; }

 private:
  static int check_logical(int n) {
    if (n != 1 && n != 2) {
      throw std::invalid_argument("Encoding: n_logical must be 1 or 2, got " + std::to_string(n));
    }
    return n;
  }

  QuditSystem logical_;
  std::shared_ptr<const ParafermionSystem> sys_;
  Matrix isometry_;
};

inline Encoding build_encoding(int d, int n_logical) { return {d, n_logical}; }

inline Restriction restrict(const Encoding& enc, const DenseOperator& a) { return enc.restrict(a); }

/// C_X^a |i, j> = |i, j + a i>
inline DenseOperator controlled_x(int d, int a = 1) {
  const QuditSystem sys(d, 2);
  Matrix m = Matrix::Zero(sys.dim(), sys.dim());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m(sys.index_of({i, j + a * i}), sys.index_of({i, j})) = 1.0;
    }
  }
  return {sys, std::move(m)};
}

/// C_Z^a |i, j> = omega^(a i j) |i, j>
inline DenseOperator controlled_z(int d, int a = 1) {
  const QuditSystem sys(d, 2);
  Matrix m = Matrix::Zero(sys.dim(), sys.dim());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Eigen::Index k = sys.index_of({i, j});
      m(k, k) = CyclotomicPhase::omega_power(d, static_cast<std::int64_t>(a) * i * j).as_complex();
    }
  }
  return {sys, std::move(m)};
}

/// diag(check_c_k): the logical action of U_1.
inline DenseOperator quadratic_phase_gate(const CoefficientVector& c) {
  const auto check = inverse_dft(c);
  Matrix m = Matrix::Zero(c.d(), c.d());
  for (int k = 0; k < c.d(); ++k) {
    m(k, k) = check[static_cast<std::size_t>(k)];
  }
  return {QuditSystem(c.d(), 1), std::move(m)};
}

/// Identification of a restricted braid. `phase` is the verified global phase lambda in
/// T(U) = lambda G; `exact_phase` is lambda in the phase ring when it lies there.
struct LogicalGateID {
  std::string name;  // "identity", "X^aZ^b", "F", "F^2", "F^dagger", "diag(check_c)", "C_X^a", "C_Z^a" or "unknown"
  int power = 0;     // a for C_X^a / C_Z^a, k for F^k
  Complex phase = 1.0;
  std::optional<CyclotomicPhase> exact_phase;
  double leakage = 0.0;
  DenseOperator logical;

  bool known() const { return name != "unknown"; }
};

namespace detail {

struct DictionaryEntry {
  std::string name;
  int power;
  DenseOperator op;
};

inline std::vector<DictionaryEntry> gate_dictionary(const QuditSystem& logical, const CoefficientVector& c) {
  const int d = logical.d();
  std::vector<DictionaryEntry> out;
  out.push_back({"identity", 0, DenseOperator::identity(logical)});
  if (logical.n() == 1) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        if (a == 0 && b == 0) {
          continue;
        }
        out.push_back({"X^" + std::to_string(a) + "Z^" + std::to_string(b), 0,
                       PauliLabel(d, {a}, {b}).to_operator()});
      }
    }
    const DenseOperator f = fourier_gate(d);
    out.push_back({"F", 1, f});
    if (d > 2) {
      out.push_back({"F^2", 2, f * f});
      out.push_back({"F^dagger", 3, f.adjoint()});
    }
    out.push_back({"diag(check_c)", 0, quadratic_phase_gate(c)});
  } else {
    for (int a = 1; a < d; ++a) {
      out.push_back({"C_X^" + std::to_string(a), a, controlled_x(d, a)});
    }
    for (int a = 1; a < d; ++a) {
      out.push_back({"C_Z^" + std::to_string(a), a, controlled_z(d, a)});
    }
  }
  return out;
}

}  // namespace detail

/// Matches a logical operator against the dictionary up to global phase.
inline LogicalGateID identify_logical(const DenseOperator& logical, const CoefficientVector& c, double leakage = 0.0) {
  for (const auto& entry : detail::gate_dictionary(logical.system(), c)) {
    if (auto lambda = equal_up_to_phase(logical, entry.op, kGateTolerance)) {
      return {entry.name, entry.power, *lambda, CyclotomicPhase::nearest(logical.d(), *lambda, kGateTolerance), leakage,
              logical};
    }
  }
  return {"unknown", 0, 1.0, std::nullopt, leakage, logical};
}

/// Restricts the braid to the code space and names the resulting gate. Throws LeakageError when
/// the braid does not preserve the code space.
inline LogicalGateID identify_gate(const Encoding& enc, const BraidRepresentation& rep, const BraidWord& word) {
  const Restriction t = enc.restrict(compose_braid(rep, word));
  if (!t.preserves_subspace()) {
    throw LeakageError(t.leakage);
  }
  return identify_logical(t.logical, rep.coefficients(), t.leakage);
}

/// Conjugation images T(U) P T(U)^dagger of the logical X_i, Z_i.
struct PauliImage {
  PauliLabel input;
  std::optional<PauliLabel> image;  // absent when the image is not a Pauli monomial
};

struct PauliAction {
  std::vector<PauliImage> entries;  // X_1, Z_1, X_2, Z_2, ...
  double leakage = 0.0;

  const PauliImage& x(int i) const { return entries.at(static_cast<std::size_t>(2 * i - 2)); }
  const PauliImage& z(int i) const { return entries.at(static_cast<std::size_t>(2 * i - 1)); }
  bool is_clifford() const {
    return std::all_of(entries.begin(), entries.end(), [](const PauliImage& e) { return e.image.has_value(); });
  }
};

inline PauliAction pauli_action(const DenseOperator& logical, double leakage = 0.0) {
  const QuditSystem& sys = logical.system();
  PauliAction out;
  out.leakage = leakage;
  const DenseOperator ud = logical.adjoint();
  for (int i = 1; i <= sys.n(); ++i) {
    for (const auto& p : {PauliLabel::x_on(sys.d(), sys.n(), i), PauliLabel::z_on(sys.d(), sys.n(), i)}) {
      out.entries.push_back({p, decompose_pauli(logical * p.to_operator() * ud, kGateTolerance)});
    }
  }
  return out;
}

inline PauliAction pauli_conjugation(const Encoding& enc, const BraidRepresentation& rep, const BraidWord& word) {
  const Restriction t = enc.restrict(compose_braid(rep, word));
  if (!t.preserves_subspace()) {
    throw LeakageError(t.leakage);
  }
  return pauli_action(t.logical, t.leakage);
}

/// U Lambda_i U^dagger for every parity i = 1..2n-1.
inline std::vector<DenseOperator> conjugate_parities(const BraidRepresentation& rep, const BraidWord& word) {
  const DenseOperator u = compose_braid(rep, word);
  const DenseOperator ud = u.adjoint();
  std::vector<DenseOperator> out;
  for (int i = 1; i < rep.system().num_modes(); ++i) {
    out.push_back(u * rep.system().parity(i) * ud);
  }
  return out;
}

/// One row of the parity conjugation table: U Lambda_i U^dagger against its predicted image.
struct ParityTableRow {
  std::string relation;
  std::optional<Complex> phase;  // lambda with image = lambda * predicted
  std::optional<CyclotomicPhase> exact_phase;
  bool holds() const { return phase.has_value(); }
};

/// Conjugation table of the entangling braid S = V W^2 V^dagger on eight parafermions:
///   Lambda_1 -> Lambda_1,  Lambda_2 -> Lambda_2 Lambda_6^-2,  Lambda_3 -> Lambda_3,
///   Lambda_5 -> Lambda_3^-2 Lambda_5,  Lambda_6 -> Lambda_6,  Lambda_7 -> Lambda_3^2 Lambda_7,
/// each up to a recorded phase, plus invariance of Lambda_1 Lambda_3 and Lambda_5 Lambda_7.
inline std::vector<ParityTableRow> parity_conjugation_table(const BraidRepresentation& rep,
                                                            const BraidWord& word = braid_words::s(),
                                                            double tol = kGateTolerance) {
  const ParafermionSystem& sys = rep.system();
  if (sys.num_modes() != 8) {
    throw std::invalid_argument("parity_conjugation_table: needs an eight-parafermion system");
  }
  const DenseOperator u = compose_braid(rep, word);
  const DenseOperator ud = u.adjoint();
  const auto lam = [&](int i) -> const DenseOperator& { return sys.parity(i); };
  struct Expected {
    std::string relation;
    DenseOperator source;
    DenseOperator target;
  };
  const std::vector<Expected> table = {
      {"L1 -> L1", lam(1), lam(1)},
      {"L2 -> L2 L6^-2", lam(2), lam(2) * lam(6).pow(-2)},
      {"L3 -> L3", lam(3), lam(3)},
      {"L5 -> L3^-2 L5", lam(5), lam(3).pow(-2) * lam(5)},
      {"L6 -> L6", lam(6), lam(6)},
      {"L7 -> L3^2 L7", lam(7), lam(3).pow(2) * lam(7)},
      {"L1 L3 -> L1 L3", lam(1) * lam(3), lam(1) * lam(3)},
      {"L5 L7 -> L5 L7", lam(5) * lam(7), lam(5) * lam(7)},
  };
  std::vector<ParityTableRow> out;
  for (const auto& row : table) {
    ParityTableRow r{row.relation, equal_up_to_phase(u * row.source * ud, row.target, tol), std::nullopt};
    if (r.phase) {
      r.exact_phase = CyclotomicPhase::nearest(sys.d(), *r.phase, tol);
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Tableaux of the braid-generated single-qudit gates T(U_1) and T(U_1 U_2 U_1) (and the same
/// on quadruplet B when the encoding has two logical qudits).
inline std::vector<CliffordTableau> braid_single_qudit_generators(const Encoding& enc, const BraidRepresentation& rep) {
  std::vector<BraidWord> words = {BraidWord::parse("1"), braid_words::fourier()};
  if (enc.n_logical() == 2) {
    words.push_back(BraidWord::parse("5"));
    words.push_back(BraidWord::parse("5 6 5"));
  }
  std::vector<CliffordTableau> out;
  for (const auto& w : words) {
    const Restriction t = enc.restrict(compose_braid(rep, w));
    if (!t.preserves_subspace()) {
      throw LeakageError(t.leakage);
    }
    auto tab = clifford_membership(t.logical, kGateTolerance);
    if (!tab) {
      throw std::runtime_error("braid " + w.to_string() + " does not act as a Clifford gate");
    }
    out.push_back(std::move(*tab));
  }
  return out;
}

/// The entangling braid used for the two-qudit generating set: S^-((d+1)/2) for odd d, which
/// acts as C_X; S^dagger and T for even d.
inline std::vector<BraidWord> entangling_words(int d) {
  if (d % 2 == 1) {
    return {braid_words::s().pow(-(d + 1) / 2)};
  }
  return {braid_words::s().inverse(), braid_words::t()};
}

inline std::vector<CliffordTableau> braid_two_qudit_generators(const Encoding& enc, const BraidRepresentation& rep) {
  if (enc.n_logical() != 2) {
    throw std::invalid_argument("braid_two_qudit_generators: needs two logical qudits");
  }
  std::vector<CliffordTableau> out = braid_single_qudit_generators(enc, rep);
  for (const auto& w : entangling_words(enc.d())) {
    const Restriction t = enc.restrict(compose_braid(rep, w));
    if (!t.preserves_subspace()) {
      throw LeakageError(t.leakage);
    }
    auto tab = clifford_membership(t.logical, kGateTolerance);
    if (!tab) {
      throw std::runtime_error("entangling braid does not act as a Clifford gate");
    }
    out.push_back(std::move(*tab));
  }
  return out;
}

inline nlohmann::json gate_report_json(const std::string& word, const LogicalGateID& id) {
  nlohmann::json j;
  j["word"] = word;
  j["gate"] = id.name;
  if (id.exact_phase) {
    j["phase_exponent_mod_8d"] = id.exact_phase->num();
  } else {
    j["phase_exponent_mod_8d"] = nullptr;
  }
  j["leakage"] = id.leakage;
  return j;
}

}  // namespace parabraid
