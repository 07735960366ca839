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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "parabraid/cyclotomic_phase.hpp"
#include "parabraid/qudit_linalg.hpp"

namespace parabraid {

/// Coefficients c_0..c_{d-1} of the braid operator U = d^(-1/2) sum_m c_m Lambda^m.
/// Indices are taken modulo d.
class CoefficientVector {
 public:
  CoefficientVector(int d, std::vector<Complex> values) : d_(d), c_(std::move(values)) {
    if (d < 2) {
      throw std::invalid_argument("CoefficientVector: d must be >= 2");
    }
    if (static_cast<int>(c_.size()) != d) {
      throw std::invalid_argument("CoefficientVector: expected " + std::to_string(d) + " coefficients, got " +
                                  std::to_string(c_.size()));
    }
  }

  int d() const { return d_; }
  const std::vector<Complex>& values() const { return c_; }

  Complex operator[](long m) const {
    const long r = ((m % d_) + d_) % d_;
    return c_[static_cast<std::size_t>(r)];
  }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& v : c_) {
      s += std::norm(v);
    }
    return s;
  }

  /// max_m |c_m - other_m|
  double distance(const CoefficientVector& other) const {
    if (other.d_ != d_) {
      throw std::invalid_argument("CoefficientVector::distance: dimension mismatch");
    }
    double worst = 0.0;
    for (int m = 0; m < d_; ++m) {
      worst = std::max(worst, std::abs(c_[static_cast<std::size_t>(m)] - other.c_[static_cast<std::size_t>(m)]));
    }
    return worst;
  }

  std::string to_string(int precision = 6) const {
    std::string s = "(";
    char buf[96];
    for (int m = 0; m < d_; ++m) {
      const Complex v = c_[static_cast<std::size_t>(m)];
      std::snprintf(buf, sizeof(buf), "%s%.*f%+.*fi", m ? ", " : "", precision, v.real(), precision, v.imag());
      s += buf;
    }
    return s + ")";
  }

 private:
  int d_;
  std::vector<Complex> c_;
};

inline void to_json(nlohmann::json& j, const CoefficientVector& c) {
  std::vector<double> re;
  std::vector<double> im;
  for (const auto& v : c.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j = nlohmann::json{{"d", c.d()}, {"re", re}, {"im", im}};
}

inline CoefficientVector coefficient_vector_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) {
    throw std::invalid_argument("CoefficientVector JSON: re and im have different lengths");
  }
  std::vector<Complex> values;
  for (std::size_t i = 0; i < re.size(); ++i) {
    values.emplace_back(re[i], im[i]);
  }
  return {d, std::move(values)};
}

namespace detail {

inline std::vector<Complex> omega_table(int d) {
  std::vector<Complex> w(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    w[static_cast<std::size_t>(k)] = CyclotomicPhase::omega_power(d, k).as_complex();
  }
  return w;
}

inline int mod(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

}  // namespace detail

/// Components sum_m c_m conj(c_{m+r}) - d delta_{r,0} for r = 0..d-1.
inline std::vector<Complex> unitarity_components(const CoefficientVector& c) {
  const int d = c.d();
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    Complex s = 0.0;
    for (int m = 0; m < d; ++m) {
      s += c[m] * std::conj(c[m + r]);
    }
    out[static_cast<std::size_t>(r)] = s - (r == 0 ? Complex(d) : Complex(0.0));
  }
  return out;
}

inline double unitarity_residual(const CoefficientVector& c) {
  double worst = 0.0;
  for (const auto& v : unitarity_components(c)) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

/// Entry (k, m) is sum_r c_r c_{k-r} c_m omega^(mr) - sum_r c_r c_k c_{m-r} omega^(kr).
inline std::vector<Complex> yang_baxter_components(const CoefficientVector& c) {
  const int d = c.d();
  const auto w = detail::omega_table(d);
  std::vector<Complex> out(static_cast<std::size_t>(d) * d);
  for (int k = 0; k < d; ++k) {
    for (int m = 0; m < d; ++m) {
      Complex lhs = 0.0;
      Complex rhs = 0.0;
      for (int r = 0; r < d; ++r) {
        lhs += c[r] * c[k - r] * c[m] * w[static_cast<std::size_t>(detail::mod(static_cast<long>(m) * r, d))];
        rhs += c[r] * c[k] * c[m - r] * w[static_cast<std::size_t>(detail::mod(static_cast<long>(k) * r, d))];
      }
      out[static_cast<std::size_t>(k) * d + m] = lhs - rhs;
    }
  }
  return out;
}

inline double yang_baxter_residual(const CoefficientVector& c) {
  double worst = 0.0;
  for (const auto& v : yang_baxter_components(c)) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline const char* sign_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

/// One of the 2d quadratic-phase solutions c_m = omega^(+-m(m+2r+d)/2).
struct FZCParams {
  int d;
  int r;
  Sign sign = Sign::plus;
};

/// Exact phases of the quadratic-phase solution.
inline std::vector<CyclotomicPhase> fzc_phases(const FZCParams& p) {
  if (p.d < 2) {
    throw std::invalid_argument("fzc_phases: d must be >= 2");
  }
  const int r = detail::mod(p.r, p.d);
  std::vector<CyclotomicPhase> out;
  for (int m = 0; m < p.d; ++m) {
    // omega^(m(m+2r+d)/2) is 4 m (m+2r+d) in units of omega^(1/8).
    const std::int64_t num = 4LL * m * (m + 2LL * r + p.d);
    out.emplace_back(p.d, sign_value(p.sign) * num);
  }
  return out;
}

inline CoefficientVector fzc_coefficients(const FZCParams& p) {
  std::vector<Complex> values;
  for (const auto& ph : fzc_phases(p)) {
    values.push_back(ph.as_complex());
  }
  return {p.d, std::move(values)};
}

/// c = (sqrt(d), 0, ..., 0), the identity braid. It solves both constraints.
inline CoefficientVector trivial_solution(int d) {
  std::vector<Complex> values(static_cast<std::size_t>(d), 0.0);
  values[0] = std::sqrt(static_cast<double>(d));
  return {d, std::move(values)};
}

inline bool is_trivial(const CoefficientVector& c, double tol) { return c.distance(trivial_solution(c.d())) <= tol; }

/// Result of fixing the global phase: `anchor` is the index whose entry was made real and
/// non-negative (0 in the usual case, the lowest nonzero index when c_0 vanishes, -1 for c = 0).
struct GaugeFixed {
  CoefficientVector c;
  int anchor;
};

inline constexpr double kGaugeZeroTolerance = 1e-12;

inline GaugeFixed gauge_fix(const CoefficientVector& c) {
  int anchor = -1;
  for (int m = 0; m < c.d(); ++m) {
    if (std::abs(c[m]) > kGaugeZeroTolerance) {
      anchor = m;
      break;
    }
  }
  if (anchor < 0) {
    return {c, -1};
  }
  const Complex rot = std::conj(c[anchor]) / std::abs(c[anchor]);
  std::vector<Complex> values;
  for (const auto& v : c.values()) {
    values.push_back(rot * v);
  }
  values[static_cast<std::size_t>(anchor)] = std::abs(c[anchor]);
  return {CoefficientVector(c.d(), std::move(values)), anchor};
}

/// c_n -> e^{i phi} c_n
struct GlobalPhase {
  double phi;
};
/// c_n -> omega^n c_n
struct Twist {};
/// c_n -> conj(c_{-n})
struct ConjugateReverse {};

using Symmetry = std::variant<GlobalPhase, Twist, ConjugateReverse>;

/// Applies a constraint-preserving transformation and re-fixes the gauge.
inline CoefficientVector apply_symmetry(const CoefficientVector& c, const Symmetry& which) {
  const int d = c.d();
  std::vector<Complex> values(static_cast<std::size_t>(d));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        for (int n = 0; n < d; ++n) {
          if constexpr (std::is_same_v<T, GlobalPhase>) {
            values[static_cast<std::size_t>(n)] = std::polar(1.0, s.phi) * c[n];
          } else if constexpr (std::is_same_v<T, Twist>) {
            values[static_cast<std::size_t>(n)] = CyclotomicPhase::omega_power(d, n).as_complex() * c[n];
          } else {
            values[static_cast<std::size_t>(n)] = std::conj(c[-n]);
          }
        }
      },
      which);
  return gauge_fix(CoefficientVector(d, std::move(values))).c;
}

/// The continuous d = 4 family (1, e^{i phi}, +-1, -+e^{i phi}).
inline CoefficientVector d4_family(double phi, Sign sign) {
  const Complex e = std::polar(1.0, phi);
  const double s = sign_value(sign);
  return {4, {1.0, e, s, -s * e}};
}

/// The six independent d = 3 constraint equations, each returned as its own residual:
///   |c0|^2+|c1|^2+|c2|^2 - 3,  c0 c1* + c1 c2* + c2 c0*,  c0 c2* + c1 c0* + c2 c1*,
///   c0^2 c1 + c1^2 c2 + c2^2 c0,  c0^2 c2 + c1^2 c0 + c2^2 c1,  c1^3 - c2^3.
inline std::array<Complex, 6> qutrit_constraint_equations(const CoefficientVector& c) {
  if (c.d() != 3) {
    throw std::invalid_argument("qutrit_constraint_equations: d must be 3");
  }
  const Complex c0 = c[0];
  const Complex c1 = c[1];
  const Complex c2 = c[2];
  return {std::norm(c0) + std::norm(c1) + std::norm(c2) - 3.0,
          c0 * std::conj(c1) + c1 * std::conj(c2) + c2 * std::conj(c0),
          c0 * std::conj(c2) + c1 * std::conj(c0) + c2 * std::conj(c1),
          c0 * c0 * c1 + c1 * c1 * c2 + c2 * c2 * c0,
          c0 * c0 * c2 + c1 * c1 * c0 + c2 * c2 * c1,
          c1 * c1 * c1 - c2 * c2 * c2};
}

/// The seven independent d = 4 constraint equations, one residual each.
inline std::array<Complex, 7> ququart_constraint_equations(const CoefficientVector& c) {
  if (c.d() != 4) {
    throw std::invalid_argument("ququart_constraint_equations: d must be 4");
  }
  const Complex c0 = c[0];
  const Complex c1 = c[1];
  const Complex c2 = c[2];
  const Complex c3 = c[3];
  return {std::norm(c0) + std::norm(c1) + std::norm(c2) + std::norm(c3) - 4.0,
          c0 * std::conj(c1) + c1 * std::conj(c2) + c2 * std::conj(c3) + c3 * std::conj(c0),
          c0 * std::conj(c2) + c1 * std::conj(c3) + c2 * std::conj(c0) + c3 * std::conj(c1),
          c1 * (c0 * c0 + c2 * c2) + 2.0 * c0 * c2 * c3,
          c3 * (c0 * c0 + c2 * c2) + 2.0 * c0 * c1 * c2,
          c0 * (c1 * c1 + c3 * c3) + c0 * c0 * c2 - c2 * c2 * c2 + 2.0 * c1 * c2 * c3,
          c1 * c1 - c3 * c3};
}

/// The six d = 3 solutions in table order, as exact phases (c_0, c_1, c_2).
inline std::vector<std::array<CyclotomicPhase, 3>> qutrit_solution_phases() {
  const auto w = [](int k) { return CyclotomicPhase::omega_power(3, k); };
  return {{w(0), w(0), w(1)},  {w(0), w(-1), w(-1)}, {w(0), w(1), w(0)},
          {w(0), w(-1), w(0)}, {w(0), w(0), w(-1)},  {w(0), w(1), w(1)}};
}

inline std::vector<CoefficientVector> qutrit_solution_table() {
  std::vector<CoefficientVector> out;
  for (const auto& row : qutrit_solution_phases()) {
    out.emplace_back(3, std::vector<Complex>{row[0].as_complex(), row[1].as_complex(), row[2].as_complex()});
  }
  return out;
}

}  // namespace parabraid
