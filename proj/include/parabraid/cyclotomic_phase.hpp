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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace parabraid {

/// Exact root of unity exp(2*pi*i * num / (8d)).
///
/// With omega = exp(2*pi*i/d), the ring Z_{8d} of exponents holds every
/// integer, half-integer and eighth-integer power of omega. omega^(1/2) is
/// always exp(pi*i/d); there is exactly one branch.
class CyclotomicPhase {
 public:
  CyclotomicPhase(int d, std::int64_t num) : d_(d) {
    if (d < 2) {
      throw std::invalid_argument("CyclotomicPhase: d must be >= 2, got " + std::to_string(d));
    }
    num_ = reduce(num);
  }

  static CyclotomicPhase one(int d) { return {d, 0}; }

  /// omega^(p/q). q must divide 8p.
  static CyclotomicPhase omega_power(int d, std::int64_t p, std::int64_t q = 1) {
    if (q == 0 || (8 * p) % q != 0) {
      throw std::invalid_argument("CyclotomicPhase::omega_power: exponent " + std::to_string(p) + "/" +
                                  std::to_string(q) + " is not a multiple of 1/8");
    }
    return {d, 8 * p / q};
  }

  /// The ring element closest to z, provided |z - phase| <= tol.
  static std::optional<CyclotomicPhase> nearest(int d, std::complex<double> z, double tol) {
    const double modulus = 8.0 * d;
    const double turns = std::arg(z) / (2.0 * std::numbers::pi);
    const auto num = static_cast<std::int64_t>(std::llround(turns * modulus));
    CyclotomicPhase candidate(d, num);
    if (std::abs(z - candidate.as_complex()) > tol) {
      return std::nullopt;
    }
    return candidate;
  }

  int d() const { return d_; }
  std::int64_t num() const { return num_; }
  std::int64_t modulus() const { return 8 * static_cast<std::int64_t>(d_); }

  std::complex<double> as_complex() const {
    // Evaluate on the symmetric range (-4d, 4d] to keep the angle small.
    std::int64_t centered = num_;
    if (2 * centered > modulus()) {
      centered -= modulus();
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(centered) / static_cast<double>(modulus());
    return std::polar(1.0, angle);
  }

  CyclotomicPhase operator*(const CyclotomicPhase& other) const {
    require_same_ring(other);
    return {d_, num_ + other.num_};
  }
  CyclotomicPhase& operator*=(const CyclotomicPhase& other) { return *this = *this * other; }
  CyclotomicPhase operator/(const CyclotomicPhase& other) const { return *this * other.inverse(); }

  CyclotomicPhase pow(std::int64_t k) const {
    // num_ < 8d and |k| is small at desk scale; reduce k first anyway.
    const std::int64_t kr = ((k % modulus()) + modulus()) % modulus();
    return {d_, num_ * kr};
  }

  CyclotomicPhase inverse() const { return {d_, -num_}; }
  CyclotomicPhase conj() const { return inverse(); }

  friend bool operator==(const CyclotomicPhase& a, const CyclotomicPhase& b) {
    return a.d_ == b.d_ && a.num_ == b.num_;
  }

  /// Exponent of omega as a reduced fraction, e.g. "omega^(5/8)", "omega^2", "1".
  std::string to_string() const {
    if (num_ == 0) {
      return "1";
    }
    const std::int64_t g = std::gcd(num_, std::int64_t{8});
    const std::int64_t p = num_ / g;
    const std::int64_t q = 8 / g;
    if (q == 1) {
      return "omega^" + std::to_string(p);
    }
    return "omega^(" + std::to_string(p) + "/" + std::to_string(q) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicPhase& p) { return os << p.to_string(); }

 private:
  std::int64_t reduce(std::int64_t num) const {
    const std::int64_t m = modulus();
    return ((num % m) + m) % m;
  }

  void require_same_ring(const CyclotomicPhase& other) const {
    if (other.d_ != d_) {
      throw std::invalid_argument("CyclotomicPhase: mixing rings d=" + std::to_string(d_) + " and d=" +
                                  std::to_string(other.d_));
    }
  }

  int d_;
  std::int64_t num_ = 0;
};

}  // namespace parabraid
