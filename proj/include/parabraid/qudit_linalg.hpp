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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabraid/cyclotomic_phase.hpp"

namespace parabraid {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default tolerance for operator identities.
inline constexpr double kDefaultTolerance = 1e-10;

inline constexpr std::size_t kDefaultSizeBound = 4096;

/// Largest admissible Hilbert-space dimension d^n. PARABRAID_SIZE_BOUND overrides the default.
inline std::size_t size_bound() {
  if (const char* env = std::getenv("PARABRAID_SIZE_BOUND"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
    throw std::invalid_argument(std::string("PARABRAID_SIZE_BOUND is not a positive integer: ") + env);
  }
  return kDefaultSizeBound;
}

class SizeBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// n qudits of dimension d. Basis index k = sum_i k_i d^(n-i): qudit 1 is the most significant digit.
class QuditSystem {
 public:
  QuditSystem(int d, int n) : d_(d), n_(n) {
    if (d < 2) {
      throw std::invalid_argument("QuditSystem: d must be >= 2, got " + std::to_string(d));
    }
    if (n < 1) {
      throw std::invalid_argument("QuditSystem: n must be >= 1, got " + std::to_string(n));
    }
    const std::size_t bound = size_bound();
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) {
      dim *= static_cast<std::size_t>(d);
      if (dim > bound) {
        throw SizeBoundExceeded("QuditSystem: dimension " + std::to_string(d) + "^" + std::to_string(n) +
                                " exceeds the size bound " + std::to_string(bound));
      }
    }
    dim_ = static_cast<Eigen::Index>(dim);
  }

  int d() const { return d_; }
  int n() const { return n_; }
  Eigen::Index dim() const { return dim_; }

  /// Digit k_i (1-based qudit i) of basis index k.
  int digit(Eigen::Index k, int i) const {
    Eigen::Index stride = 1;
    for (int j = i; j < n_; ++j) {
      stride *= d_;
    }
    return static_cast<int>((k / stride) % d_);
  }

  Eigen::Index index_of(const std::vector<int>& digits) const {
    Eigen::Index k = 0;
    for (int v : digits) {
      k = k * d_ + (((v % d_) + d_) % d_);
    }
    return k;
  }

  Complex omega() const { return CyclotomicPhase::omega_power(d_, 1).as_complex(); }

  friend bool operator==(const QuditSystem& a, const QuditSystem& b) { return a.d_ == b.d_ && a.n_ == b.n_; }

 private:
  int d_;
  int n_;
  Eigen::Index dim_ = 0;
};

/// Dense complex matrix acting on the space of a QuditSystem.
class DenseOperator {
 public:
  DenseOperator(QuditSystem sys, Matrix entries) : sys_(sys), m_(std::move(entries)) {
    if (m_.rows() != sys_.dim() || m_.cols() != sys_.dim()) {
      throw std::invalid_argument("DenseOperator: matrix is " + std::to_string(m_.rows()) + "x" +
                                  std::to_string(m_.cols()) + ", system dimension is " + std::to_string(sys_.dim()));
    }
  }

  static DenseOperator identity(const QuditSystem& sys) { return {sys, Matrix::Identity(sys.dim(), sys.dim())}; }
  static DenseOperator zero(const QuditSystem& sys) { return {sys, Matrix::Zero(sys.dim(), sys.dim())}; }

  const QuditSystem& system() const { return sys_; }
  int d() const { return sys_.d(); }
  int n() const { return sys_.n(); }
  Eigen::Index dim() const { return sys_.dim(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  DenseOperator adjoint() const { return {sys_, m_.adjoint()}; }

  /// Integer power; negative exponents use the adjoint and are meaningful for unitaries only.
  DenseOperator pow(int k) const {
    if (k < 0) {
      return adjoint().pow(-k);
    }
    Matrix result = Matrix::Identity(dim(), dim());
    Matrix base = m_;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return {sys_, std::move(result)};
  }

  DenseOperator operator*(const DenseOperator& other) const {
    require_same(other);
    return {sys_, m_ * other.m_};
  }
  DenseOperator operator+(const DenseOperator& other) const {
    require_same(other);
    return {sys_, m_ + other.m_};
  }
  DenseOperator operator-(const DenseOperator& other) const {
    require_same(other);
    return {sys_, m_ - other.m_};
  }
  friend DenseOperator operator*(Complex s, const DenseOperator& a) { return {a.sys_, s * a.m_}; }

  /// max_{ij} |A_ij|
  double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

  double unitarity_residual() const {
    return (m_ * m_.adjoint() - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  }
  bool is_unitary(double tol = kDefaultTolerance) const { return unitarity_residual() <= tol; }

  bool approx_equal(const DenseOperator& other, double tol = kDefaultTolerance) const {
    require_same(other);
    return (m_ - other.m_).cwiseAbs().maxCoeff() <= tol;
  }

  /// Exactly one entry of modulus 1 (within tol) per row and column, everything else below tol.
  bool is_monomial(double tol = 1e-12) const {
    std::vector<int> col_hits(static_cast<std::size_t>(dim()), 0);
    for (Eigen::Index r = 0; r < dim(); ++r) {
      int hits = 0;
      for (Eigen::Index c = 0; c < dim(); ++c) {
        const double a = std::abs(m_(r, c));
        if (a <= tol) {
          continue;
        }
        if (std::abs(a - 1.0) > tol) {
          return false;
        }
        ++hits;
        ++col_hits[static_cast<std::size_t>(c)];
      }
      if (hits != 1) {
        return false;
      }
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
  }

 private:
  void require_same(const DenseOperator& other) const {
    if (!(other.sys_ == sys_)) {
      throw std::invalid_argument("DenseOperator: system mismatch (d=" + std::to_string(sys_.d()) + ", n=" +
                                  std::to_string(sys_.n()) + " vs d=" + std::to_string(other.sys_.d()) +
                                  ", n=" + std::to_string(other.sys_.n()) + ")");
    }
  }

  QuditSystem sys_;
  Matrix m_;
};

inline double max_abs_diff(const DenseOperator& a, const DenseOperator& b) { return (a - b).max_abs(); }

/// max |AB - s BA|
inline double twisted_commutator_residual(const DenseOperator& a, const DenseOperator& b, Complex s = 1.0) {
  return (a * b - s * (b * a)).max_abs();
}

/// Kronecker product of two d-level matrices (first factor most significant).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// The d x d local operator `local` on qudit i (1-based), identity elsewhere.
inline DenseOperator embed(const QuditSystem& sys, int i, const Matrix& local) {
  if (i < 1 || i > sys.n()) {
    throw std::out_of_range("embed: qudit index " + std::to_string(i) + " outside 1.." + std::to_string(sys.n()));
  }
  if (local.rows() != sys.d() || local.cols() != sys.d()) {
    throw std::invalid_argument("embed: local operator must be d x d");
  }
  Matrix out = Matrix::Identity(1, 1);
  for (int j = 1; j <= sys.n(); ++j) {
    out = kron(out, j == i ? local : Matrix::Identity(sys.d(), sys.d()));
  }
  return {sys, std::move(out)};
}

inline Matrix local_shift(int d) {
  Matrix x = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = 1.0;
  }
  return x;
}

inline Matrix local_clock(int d) {
  Matrix z = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    z(k, k) = CyclotomicPhase::omega_power(d, k).as_complex();
  }
  return z;
}

/// X|k> = |k+1 mod d> on qudit i.
inline DenseOperator pauli_x(const QuditSystem& sys, int i) { return embed(sys, i, local_shift(sys.d())); }

/// Z|k> = omega^k |k> on qudit i.
inline DenseOperator pauli_z(const QuditSystem& sys, int i) { return embed(sys, i, local_clock(sys.d())); }

/// Qudit Fourier gate, entries omega^(km)/sqrt(d).
inline DenseOperator fourier_gate(int d) {
  const QuditSystem sys(d, 1);
  Matrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    for (int m = 0; m < d; ++m) {
      f(k, m) = scale * CyclotomicPhase::omega_power(d, static_cast<std::int64_t>(k) * m).as_complex();
    }
  }
  return {sys, std::move(f)};
}

/// The unit scalar lambda with max|A - lambda B| <= tol, if any.
///
/// lambda is read off the largest-modulus entry of B and normalised to modulus one.
inline std::optional<Complex> equal_up_to_phase(const DenseOperator& a, const DenseOperator& b,
                                                double tol = kDefaultTolerance) {
  if (a.dim() != b.dim() || a.d() != b.d()) {
    throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
  }
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  const double largest = b.matrix().cwiseAbs().maxCoeff(&r, &c);
  if (largest <= tol) {
    return std::nullopt;
  }
  const Complex ratio = a(r, c) / b(r, c);
  if (std::abs(ratio) <= tol) {
    return std::nullopt;
  }
  const Complex lambda = ratio / std::abs(ratio);
  if ((a.matrix() - lambda * b.matrix()).cwiseAbs().maxCoeff() > tol) {
    return std::nullopt;
  }
  return lambda;
}

}  // namespace parabraid
