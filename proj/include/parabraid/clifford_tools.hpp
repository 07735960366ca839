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
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabraid/cyclotomic_phase.hpp"
#include "parabraid/qudit_linalg.hpp"

namespace parabraid {

/// e^{i pi phase / d} prod_i X_i^{x_i} Z_i^{z_i}, exponents in Z_d, phase in Z_{2d}.
///
/// The half-integer powers of omega cover every conjugation image of a Pauli monomial
/// under a Clifford, including even d.
class PauliLabel {
 public:
  PauliLabel(int d, std::vector<int> x, std::vector<int> z, int phase = 0) : d_(d), x_(std::move(x)), z_(std::move(z)) {
    if (d < 2) {
      throw std::invalid_argument("PauliLabel: d must be >= 2");
    }
    if (x_.size() != z_.size() || x_.empty()) {
      throw std::invalid_argument("PauliLabel: x and z exponent lists must be non-empty and equally long");
    }
    for (auto& v : x_) {
      v = wrap(v, d_);
    }
    for (auto& v : z_) {
      v = wrap(v, d_);
    }
    phase_ = wrap(phase, 2 * d_);
  }

  static PauliLabel identity(int d, int n) {
    return {d, std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
  }
  /// X_i^power, 1-based qudit i.
  static PauliLabel x_on(int d, int n, int i, int power = 1) {
    PauliLabel p = identity(d, n);
    p.x_.at(static_cast<std::size_t>(i - 1)) = wrap(power, d);
    return p;
  }
  static PauliLabel z_on(int d, int n, int i, int power = 1) {
    PauliLabel p = identity(d, n);
    p.z_.at(static_cast<std::size_t>(i - 1)) = wrap(power, d);
    return p;
  }

  int d() const { return d_; }
  int n() const { return static_cast<int>(x_.size()); }
  const std::vector<int>& x() const { return x_; }
  const std::vector<int>& z() const { return z_; }
  int phase() const { return phase_; }

  CyclotomicPhase phase_as_cyclotomic() const { return {d_, 4LL * phase_}; }

  PauliLabel with_phase(int phase) const {
    PauliLabel p = *this;
    p.phase_ = wrap(phase, 2 * d_);
    return p;
  }

  /// Z^b X^c = omega^{bc} X^c Z^b is the only reordering needed.
  PauliLabel operator*(const PauliLabel& o) const {
    require_compatible(o);
    std::vector<int> x(x_.size());
    std::vector<int> z(z_.size());
    long ph = phase_ + o.phase_;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      ph += 2L * z_[i] * o.x_[i];
      x[i] = x_[i] + o.x_[i];
      z[i] = z_[i] + o.z_[i];
    }
    return {d_, std::move(x), std::move(z), static_cast<int>(ph % (2 * d_))};
  }

  PauliLabel pow(int k) const {
    PauliLabel out = identity(d_, n());
    for (int i = 0; i < wrap(k, 2 * d_ * d_); ++i) {
      out = out * *this;
    }
    return out;
  }

  /// s with P Q = omega^s Q P.
  int commutation_exponent(const PauliLabel& o) const {
    require_compatible(o);
    long s = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      s += static_cast<long>(z_[i]) * o.x_[i] - static_cast<long>(x_[i]) * o.z_[i];
    }
    return wrap(static_cast<int>(s % d_), d_);
  }

  bool is_identity_up_to_phase() const {
    return std::all_of(x_.begin(), x_.end(), [](int v) { return v == 0; }) &&
           std::all_of(z_.begin(), z_.end(), [](int v) { return v == 0; });
  }

  DenseOperator to_operator() const {
    const QuditSystem sys(d_, n());
    Matrix m = Matrix::Identity(1, 1);
    const Matrix x = local_shift(d_);
    const Matrix z = local_clock(d_);
    for (int i = 0; i < n(); ++i) {
      Matrix xi = Matrix::Identity(d_, d_);
      Matrix zi = Matrix::Identity(d_, d_);
      for (int k = 0; k < x_[static_cast<std::size_t>(i)]; ++k) {
        xi = xi * x;
      }
      for (int k = 0; k < z_[static_cast<std::size_t>(i)]; ++k) {
        zi = zi * z;
      }
      m = kron(m, xi * zi);
    }
    return {sys, phase_as_cyclotomic().as_complex() * m};
  }

  /// e.g. "omega^(1/2) X1 Z1^2 X2"; exponents printed in 0..d-1.
  std::string to_string() const {
    std::string s;
    if (phase_ != 0) {
      s = phase_as_cyclotomic().to_string();
    }
    const auto term = [&](char name, int i, int power) {
      if (power == 0) {
        return;
      }
      if (!s.empty()) {
        s += ' ';
      }
      s += name + std::to_string(i + 1);
      if (power != 1) {
        s += '^' + std::to_string(power);
      }
    };
    for (int i = 0; i < n(); ++i) {
      term('X', i, x_[static_cast<std::size_t>(i)]);
      term('Z', i, z_[static_cast<std::size_t>(i)]);
    }
    return s.empty() ? "I" : s;
  }

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;

 private:
  static int wrap(int v, int m) { return ((v % m) + m) % m; }

  void require_compatible(const PauliLabel& o) const {
    if (o.d_ != d_ || o.x_.size() != x_.size()) {
      throw std::invalid_argument("PauliLabel: incompatible operands");
    }
  }

  int d_;
  std::vector<int> x_;
  std::vector<int> z_;
  int phase_ = 0;
};

/// Reads op as lambda X^a Z^b (lambda a 2d-th root of unity) if it is one, within tol.
inline std::optional<PauliLabel> decompose_pauli(const DenseOperator& op, double tol = 1e-9) {
  const QuditSystem& sys = op.system();
  const int d = sys.d();
  const int n = sys.n();
  // X^a Z^b |j> = omega^{b.j} |j + a>: column 0 fixes a and lambda, the unit columns fix b.
  Eigen::Index r0 = 0;
  op.matrix().col(0).cwiseAbs().maxCoeff(&r0);
  const Complex lambda = op(r0, 0);
  if (std::abs(std::abs(lambda) - 1.0) > tol) {
    return std::nullopt;
  }
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    a[static_cast<std::size_t>(i - 1)] = sys.digit(r0, i);
  }
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> unit(static_cast<std::size_t>(n), 0);
    unit[static_cast<std::size_t>(i - 1)] = 1;
    std::vector<int> shifted = unit;
    for (int q = 0; q < n; ++q) {
      shifted[static_cast<std::size_t>(q)] += a[static_cast<std::size_t>(q)];
    }
    const Complex ratio = op(sys.index_of(shifted), sys.index_of(unit)) / lambda;
    const auto w = CyclotomicPhase::nearest(d, ratio, 1e-6);
    if (!w || w->num() % 8 != 0) {
      return std::nullopt;
    }
    b[static_cast<std::size_t>(i - 1)] = static_cast<int>(w->num() / 8);
  }
  const double turns = std::arg(lambda) / std::numbers::pi * d;
  const int k = static_cast<int>(std::lround(turns));
  PauliLabel candidate(d, std::move(a), std::move(b), k);
  if (max_abs_diff(op, candidate.to_operator()) > tol) {
    return std::nullopt;
  }
  return candidate;
}

/// A Clifford element modulo global phase, stored as the images of X_i and Z_i under
/// conjugation P -> U P U^dagger.
class CliffordTableau {
 public:
  CliffordTableau(std::vector<PauliLabel> x_images, std::vector<PauliLabel> z_images)
      : xs_(std::move(x_images)), zs_(std::move(z_images)) {
    if (xs_.empty() || xs_.size() != zs_.size()) {
      throw std::invalid_argument("CliffordTableau: need one X and one Z image per qudit");
    }
    for (const auto& p : xs_) {
      require_shape(p);
    }
    for (const auto& p : zs_) {
      require_shape(p);
    }
  }

  static CliffordTableau identity(int d, int n) {
    std::vector<PauliLabel> xs;
    std::vector<PauliLabel> zs;
    for (int i = 1; i <= n; ++i) {
      xs.push_back(PauliLabel::x_on(d, n, i));
      zs.push_back(PauliLabel::z_on(d, n, i));
    }
    return {std::move(xs), std::move(zs)};
  }

  int d() const { return xs_.front().d(); }
  int n() const { return static_cast<int>(xs_.size()); }
  const std::vector<PauliLabel>& x_images() const { return xs_; }
  const std::vector<PauliLabel>& z_images() const { return zs_; }
  const PauliLabel& x_image(int i) const { return xs_.at(static_cast<std::size_t>(i - 1)); }
  const PauliLabel& z_image(int i) const { return zs_.at(static_cast<std::size_t>(i - 1)); }

  /// U P U^dagger for a Pauli label P.
  PauliLabel apply(const PauliLabel& p) const {
    if (p.d() != d() || p.n() != n()) {
      throw std::invalid_argument("CliffordTableau::apply: Pauli label shape mismatch");
    }
    PauliLabel out = PauliLabel::identity(d(), n()).with_phase(p.phase());
    for (int i = 0; i < n(); ++i) {
      out = out * xs_[static_cast<std::size_t>(i)].pow(p.x()[static_cast<std::size_t>(i)]);
      out = out * zs_[static_cast<std::size_t>(i)].pow(p.z()[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  /// Matrix-product order: (a * b) conjugates by b first.
  friend CliffordTableau operator*(const CliffordTableau& a, const CliffordTableau& b) {
    std::vector<PauliLabel> xs;
    std::vector<PauliLabel> zs;
    for (int i = 0; i < b.n(); ++i) {
      xs.push_back(a.apply(b.xs_[static_cast<std::size_t>(i)]));
      zs.push_back(a.apply(b.zs_[static_cast<std::size_t>(i)]));
    }
    return {std::move(xs), std::move(zs)};
  }

  CliffordTableau pow(int k) const {
    CliffordTableau out = identity(d(), n());
    for (int i = 0; i < k; ++i) {
      out = *this * out;
    }
    return out;
  }

  /// Number of applications returning to the identity (bounded by `limit`).
  int order(int limit = 100000) const {
    const CliffordTableau one = identity(d(), n());
    CliffordTableau p = *this;
    for (int k = 1; k <= limit; ++k) {
      if (p == one) {
        return k;
      }
      p = *this * p;
    }
    throw std::runtime_error("CliffordTableau::order: exceeded limit");
  }

  CliffordTableau inverse() const { return pow(order() - 1); }

  /// Images keep the commutation exponents of the generators and satisfy P^d = 1.
  bool is_valid() const {
    std::vector<PauliLabel> images;
    std::vector<PauliLabel> pre;
    for (int i = 1; i <= n(); ++i) {
      images.push_back(x_image(i));
      images.push_back(z_image(i));
      pre.push_back(PauliLabel::x_on(d(), n(), i));
      pre.push_back(PauliLabel::z_on(d(), n(), i));
    }
    const PauliLabel one = PauliLabel::identity(d(), n());
    for (std::size_t a = 0; a < images.size(); ++a) {
      if (images[a].pow(d()) != one) {
        return false;
      }
      for (std::size_t b = 0; b < images.size(); ++b) {
        if (images[a].commutation_exponent(images[b]) != pre[a].commutation_exponent(pre[b])) {
          return false;
        }
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= n(); ++i) {
      s += "X" + std::to_string(i) + " -> " + x_image(i).to_string() + "; ";
      s += "Z" + std::to_string(i) + " -> " + z_image(i).to_string() + (i == n() ? "" : "; ");
    }
    return s;
  }

  friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

 private:
  void require_shape(const PauliLabel& p) const {
    if (p.d() != xs_.front().d() || p.n() != static_cast<int>(xs_.size())) {
      throw std::invalid_argument("CliffordTableau: image shape mismatch");
    }
  }

  std::vector<PauliLabel> xs_;
  std::vector<PauliLabel> zs_;
};

/// Tableau of U if it maps every X_i, Z_i to a phased Pauli monomial within tol.
inline std::optional<CliffordTableau> clifford_membership(const DenseOperator& u, double tol = 1e-9) {
  const QuditSystem& sys = u.system();
  std::vector<PauliLabel> xs;
  std::vector<PauliLabel> zs;
  const DenseOperator ud = u.adjoint();
  for (int i = 1; i <= sys.n(); ++i) {
    auto xi = decompose_pauli(u * pauli_x(sys, i) * ud, tol);
    auto zi = decompose_pauli(u * pauli_z(sys, i) * ud, tol);
    if (!xi || !zi) {
      return std::nullopt;
    }
    xs.push_back(std::move(*xi));
    zs.push_back(std::move(*zi));
  }
  return CliffordTableau(std::move(xs), std::move(zs));
}

/// C_X |i, j> = |i, i + j>: X_1 -> X_1 X_2, Z_1 -> Z_1, X_2 -> X_2, Z_2 -> Z_1^dagger Z_2.
inline CliffordTableau controlled_x_tableau(int d) {
  return {{PauliLabel::x_on(d, 2, 1) * PauliLabel::x_on(d, 2, 2), PauliLabel::x_on(d, 2, 2)},
          {PauliLabel::z_on(d, 2, 1), PauliLabel::z_on(d, 2, 1, -1) * PauliLabel::z_on(d, 2, 2)}};
}

/// Generators {X -> omega^((d-1)/2) X Z^dagger, Z -> Z}, {X -> Z, Z -> X^dagger} and the Pauli shift
/// {X -> X, Z -> omega^-1 Z} on each qudit, plus the controlled shift (control 1, target 2) when
/// n = 2. The closure is the whole Clifford group modulo global phase.
inline std::vector<CliffordTableau> reference_generators(int d, int n) {
  if (n != 1 && n != 2) {
    throw std::invalid_argument("reference_generators: n must be 1 or 2");
  }
  std::vector<CliffordTableau> out;
  for (int i = 1; i <= n; ++i) {
    CliffordTableau phase = CliffordTableau::identity(d, n);
    std::vector<PauliLabel> xs = phase.x_images();
    xs[static_cast<std::size_t>(i - 1)] =
        (PauliLabel::x_on(d, n, i) * PauliLabel::z_on(d, n, i, -1)).with_phase(d - 1);
    out.emplace_back(xs, phase.z_images());

    std::vector<PauliLabel> fx = phase.x_images();
    std::vector<PauliLabel> fz = phase.z_images();
    fx[static_cast<std::size_t>(i - 1)] = PauliLabel::z_on(d, n, i);
    fz[static_cast<std::size_t>(i - 1)] = PauliLabel::x_on(d, n, i, -1);
    out.emplace_back(std::move(fx), std::move(fz));

    std::vector<PauliLabel> sz = phase.z_images();
    sz[static_cast<std::size_t>(i - 1)] = PauliLabel::z_on(d, n, i).with_phase(2 * d - 2);
    out.emplace_back(phase.x_images(), std::move(sz));
  }
  if (n == 2) {
    out.push_back(controlled_x_tableau(d));
  }
  return out;
}

/// |Sp(2n, Z_d)| from the prime-power factorisation of d:
/// |Sp(2n, Z_{p^k})| = p^((k-1)(2n^2+n)) p^(n^2) prod_{i=1..n} (p^(2i) - 1).
inline std::uint64_t symplectic_group_order(int d, int n) {
  if (d < 2 || n < 1) {
    throw std::invalid_argument("symplectic_group_order: need d >= 2 and n >= 1");
  }
  const auto ipow = [](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
      r *= b;
    }
    return r;
  };
  std::uint64_t order = 1;
  int rest = d;
  for (int p = 2; rest > 1; ++p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k == 0) {
      continue;
    }
    std::uint64_t local = ipow(static_cast<std::uint64_t>(p), (k - 1) * (2 * n * n + n) + n * n);
    for (int i = 1; i <= n; ++i) {
      local *= ipow(static_cast<std::uint64_t>(p), 2 * i) - 1;
    }
    order *= local;
  }
  return order;
}

/// Order of the n-qudit Clifford group modulo global phase: d^(2n) |Sp(2n, Z_d)|.
inline std::uint64_t clifford_group_order(int d, int n) {
  std::uint64_t paulis = 1;
  for (int i = 0; i < 2 * n; ++i) {
    paulis *= static_cast<std::uint64_t>(d);
  }
  return paulis * symplectic_group_order(d, n);
}

class ClosureLimitExceeded : public std::runtime_error {
 public:
  ClosureLimitExceeded(std::size_t partial_order, std::size_t limit)
      : std::runtime_error("closure exceeded the element limit " + std::to_string(limit)),
        partial_order_(partial_order) {}
  std::size_t partial_order() const { return partial_order_; }

 private:
  std::size_t partial_order_;
};

namespace detail {

// Fixed-size Clifford representation for the closure search (n <= 2, d <= 8): every image fits
// in 16 bits, so an element is one 64-bit key.
struct PackedPauli {
  std::array<std::uint8_t, 2> x{};
  std::array<std::uint8_t, 2> z{};
  std::uint8_t phase = 0;
};

class PackedCliffordSpace {
 public:
  PackedCliffordSpace(int d, int n) : d_(d), n_(n) {
    if (n < 1 || n > 2 || d < 2 || d > 8) {
      throw std::invalid_argument("closure supports n in {1, 2} and 2 <= d <= 8");
    }
  }

  int images() const { return 2 * n_; }

  PackedPauli pack(const PauliLabel& p) const {
    PackedPauli q;
    for (int i = 0; i < n_; ++i) {
      q.x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p.x()[static_cast<std::size_t>(i)]);
      q.z[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p.z()[static_cast<std::size_t>(i)]);
    }
    q.phase = static_cast<std::uint8_t>(p.phase());
    return q;
  }

  PackedPauli mul(const PackedPauli& a, const PackedPauli& b) const {
    PackedPauli out;
    int ph = a.phase + b.phase;
    for (int i = 0; i < n_; ++i) {
      const auto s = static_cast<std::size_t>(i);
      ph += 2 * a.z[s] * b.x[s];
      out.x[s] = static_cast<std::uint8_t>((a.x[s] + b.x[s]) % d_);
      out.z[s] = static_cast<std::uint8_t>((a.z[s] + b.z[s]) % d_);
    }
    out.phase = static_cast<std::uint8_t>(ph % (2 * d_));
    return out;
  }

  std::uint64_t key(const std::array<PackedPauli, 4>& t) const {
    std::uint64_t k = 0;
    for (int j = 0; j < images(); ++j) {
      const auto& p = t[static_cast<std::size_t>(j)];
      std::uint64_t word = p.phase;
      for (int i = 0; i < n_; ++i) {
        word = (word << 6) | (static_cast<std::uint64_t>(p.x[static_cast<std::size_t>(i)]) << 3) |
               p.z[static_cast<std::size_t>(i)];
      }
      k = (k << 16) | word;
    }
    return k;
  }

  std::array<PackedPauli, 4> unkey(std::uint64_t k) const {
    std::array<PackedPauli, 4> t{};
    for (int j = images() - 1; j >= 0; --j) {
      std::uint64_t word = k & 0xFFFFu;
      k >>= 16;
      auto& p = t[static_cast<std::size_t>(j)];
      for (int i = n_ - 1; i >= 0; --i) {
        p.z[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(word & 7u);
        p.x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((word >> 3) & 7u);
        word >>= 6;
      }
      p.phase = static_cast<std::uint8_t>(word);
    }
    return t;
  }

  // Image order X_1, Z_1, X_2, Z_2.
  std::array<PackedPauli, 4> pack(const CliffordTableau& c) const {
    std::array<PackedPauli, 4> t{};
    for (int i = 1; i <= n_; ++i) {
      t[static_cast<std::size_t>(2 * i - 2)] = pack(c.x_image(i));
      t[static_cast<std::size_t>(2 * i - 1)] = pack(c.z_image(i));
    }
    return t;
  }

  // Left action of a fixed generator h: (h o g)(P) = h(g(P)), with the powers of h's images
  // tabulated once.
  struct LeftAction {
    // power[j][e] = (image j of h)^e, j over X_1, Z_1, X_2, Z_2
    std::array<std::array<PackedPauli, 8>, 4> power{};
  };

  LeftAction left_action(const std::array<PackedPauli, 4>& h) const {
    LeftAction a;
    for (int j = 0; j < images(); ++j) {
      PackedPauli p;  // identity
      for (int e = 0; e < d_; ++e) {
        a.power[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] = p;
        p = mul(p, h[static_cast<std::size_t>(j)]);
      }
    }
    return a;
  }

  std::array<PackedPauli, 4> apply(const LeftAction& h, const std::array<PackedPauli, 4>& g) const {
    std::array<PackedPauli, 4> out{};
    for (int j = 0; j < images(); ++j) {
      const PackedPauli& q = g[static_cast<std::size_t>(j)];
      PackedPauli acc;
      acc.phase = q.phase;
      for (int i = 0; i < n_; ++i) {
        const auto s = static_cast<std::size_t>(i);
        acc = mul(acc, h.power[2 * s][q.x[s]]);
        acc = mul(acc, h.power[2 * s + 1][q.z[s]]);
      }
      out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
  }

 private:
  int d_;
  int n_;
};

// Open-addressing set of nonzero 64-bit keys.
class KeySet {
 public:
  KeySet() : slots_(1u << 12, 0) {}

  bool insert(std::uint64_t key) {
    if (2 * (size_ + 1) > slots_.size()) {
      grow();
    }
    return place(slots_, key);
  }

  bool contains(std::uint64_t key) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == 0) {
        return false;
      }
      if (slots_[i] == key) {
        return true;
      }
    }
  }

  std::size_t size() const { return size_; }

 private:
  static std::size_t hash(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }

  bool place(std::vector<std::uint64_t>& slots, std::uint64_t key) {
    const std::size_t mask = slots.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots[i] == key) {
        return false;
      }
      if (slots[i] == 0) {
        slots[i] = key;
        ++size_;
        return true;
      }
    }
  }

  void grow() {
    std::vector<std::uint64_t> bigger(slots_.size() * 2, 0);
    size_ = 0;
    for (std::uint64_t k : slots_) {
      if (k != 0) {
        place(bigger, k);
      }
    }
    slots_.swap(bigger);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace detail

/// A finite group of Clifford elements (modulo global phase), stored as sorted tableau keys.
class CliffordGroup {
 public:
  CliffordGroup(int d, int n, std::vector<std::uint64_t> sorted_keys)
      : d_(d), n_(n), keys_(std::move(sorted_keys)) {}

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t order() const { return keys_.size(); }

  bool contains(const CliffordTableau& t) const {
    if (t.d() != d_ || t.n() != n_) {
      return false;
    }
    const detail::PackedCliffordSpace space(d_, n_);
    return std::binary_search(keys_.begin(), keys_.end(), space.key(space.pack(t)));
  }

  /// Order of the image in the symplectic group, i.e. of the group modulo Pauli operators.
  std::size_t symplectic_order() const {
    std::uint64_t mask = 0;
    for (int j = 0; j < 2 * n_; ++j) {
      mask = (mask << 16) | ((std::uint64_t{1} << (6 * n_)) - 1);
    }
    std::vector<std::uint64_t> stripped;
    stripped.reserve(keys_.size());
    for (std::uint64_t k : keys_) {
      stripped.push_back(k & mask);
    }
    std::sort(stripped.begin(), stripped.end());
    return static_cast<std::size_t>(std::unique(stripped.begin(), stripped.end()) - stripped.begin());
  }

  /// Number of Pauli operators (modulo global phase) contained in the group.
  std::size_t pauli_order() const { return order() / symplectic_order(); }

  const std::vector<std::uint64_t>& keys() const { return keys_; }

  friend bool operator==(const CliffordGroup& a, const CliffordGroup& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.keys_ == b.keys_;
  }

 private:
  int d_;
  int n_;
  std::vector<std::uint64_t> keys_;
};

inline constexpr std::size_t kDefaultClosureLimit = 10'000'000;

/// Breadth-first closure of the generators and their inverses, starting from the identity.
inline CliffordGroup closure(const std::vector<CliffordTableau>& generators,
                             std::size_t limit = kDefaultClosureLimit) {
  if (generators.empty()) {
    throw std::invalid_argument("closure: no generators");
  }
  const int d = generators.front().d();
  const int n = generators.front().n();
  for (const auto& g : generators) {
    if (g.d() != d || g.n() != n) {
      throw std::invalid_argument("closure: generators act on different spaces");
    }
    if (!g.is_valid()) {
      throw std::invalid_argument("closure: generator is not a valid tableau: " + g.to_string());
    }
  }
  const detail::PackedCliffordSpace space(d, n);
  std::vector<detail::PackedCliffordSpace::LeftAction> actions;
  for (const auto& g : generators) {
    actions.push_back(space.left_action(space.pack(g)));
    actions.push_back(space.left_action(space.pack(g.inverse())));
  }

  detail::KeySet seen;
  std::vector<std::uint64_t> order;
  const std::uint64_t start = space.key(space.pack(CliffordTableau::identity(d, n)));
  seen.insert(start);
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto g = space.unkey(order[head]);
    for (const auto& h : actions) {
      const std::uint64_t k = space.key(space.apply(h, g));
      if (seen.insert(k)) {
        if (order.size() >= limit) {
          throw ClosureLimitExceeded(order.size(), limit);
        }
        order.push_back(k);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return {d, n, std::move(order)};
}

}  // namespace parabraid
