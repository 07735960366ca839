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

// Independent reference computations used by the tests. None of these call into the library
// code paths they are compared against.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Complex omega(int d, double power = 1.0) { return std::polar(1.0, 2.0 * std::numbers::pi * power / d); }

inline Matrix shift(int d) {
  Matrix m = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    m((k + 1) % d, k) = 1.0;
  }
  return m;
}

inline Matrix clock(int d) {
  Matrix m = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    m(k, k) = omega(d, k);
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Product of single-qudit factors, factor 0 on the most significant qudit.
inline Matrix tensor(const std::vector<Matrix>& factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& f : factors) {
    out = kron(out, f);
  }
  return out;
}

/// Parafermion gamma_j from explicit string operators (j is 1-based).
inline Matrix gamma(int d, int n, int j) {
  const int i = (j + 1) / 2;
  std::vector<Matrix> f(static_cast<std::size_t>(n), Matrix::Identity(d, d));
  for (int q = 1; q < i; ++q) {
    f[static_cast<std::size_t>(q - 1)] = shift(d);
  }
  f[static_cast<std::size_t>(i - 1)] = clock(d);
  if (j % 2 == 0) {
    f[static_cast<std::size_t>(i - 1)] = shift(d) * clock(d);
    return omega(d, (d + 1) / 2.0) * tensor(f);
  }
  return tensor(f);
}

/// Number of 2n x 2n matrices over Z_d preserving the standard symplectic form, by column-wise
/// backtracking over all vectors.
inline std::uint64_t symplectic_count(int d, int n) {
  const int dim = 2 * n;
  std::vector<std::vector<int>> vectors;
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  std::function<void(int)> gen = [&](int pos) {
    if (pos == dim) {
      vectors.push_back(v);
      return;
    }
    for (int a = 0; a < d; ++a) {
      v[static_cast<std::size_t>(pos)] = a;
      gen(pos + 1);
    }
  };
  gen(0);
  // vector layout (x_1..x_n, z_1..z_n); form(u, w) = x_u . z_w - z_u . x_w
  const auto form = [&](const std::vector<int>& u, const std::vector<int>& w) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      s += u[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(n + i)] -
           u[static_cast<std::size_t>(n + i)] * w[static_cast<std::size_t>(i)];
    }
    return ((s % d) + d) % d;
  };
  // target form between basis columns e_a, e_b
  const auto target = [&](int a, int b) {
    if (a < n && b == a + n) {
      return 1;
    }
    if (b < n && a == b + n) {
      return d - 1;
    }
    return 0;
  };
  std::vector<const std::vector<int>*> cols(static_cast<std::size_t>(dim));
  std::uint64_t count = 0;
  // Column order x_1, z_1, x_2, z_2.
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    order.push_back(i);
    order.push_back(n + i);
  }
  // Reindex targets to the chosen order.
  const auto target_ordered = [&](int a, int b) {
    return target(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
  };
  std::function<void(int)> place = [&](int c) {
    if (c == dim) {
      ++count;
      return;
    }
    for (const auto& cand : vectors) {
      bool ok = true;
      for (int b = 0; b < c && ok; ++b) {
        ok = form(*cols[static_cast<std::size_t>(b)], cand) == target_ordered(b, c);
      }
      if (ok) {
        cols[static_cast<std::size_t>(c)] = &cand;
        place(c + 1);
      }
    }
  };
  place(0);
  return count;
}

/// Clifford group modulo global phase: every symplectic matrix combined with every Pauli
/// correction, d^(2n) |Sp(2n, Z_d)|.
inline std::uint64_t clifford_count(int d, int n) {
  std::uint64_t paulis = 1;
  for (int i = 0; i < 2 * n; ++i) {
    paulis *= static_cast<std::uint64_t>(d);
  }
  return paulis * symplectic_count(d, n);
}

/// Order of the matrix group generated by unitaries, modulo global phase, by BFS over
/// phase-normalised matrices rounded to 1e-6.
inline std::size_t matrix_group_order(const std::vector<Matrix>& gens, std::size_t limit = 100000) {
  const auto key = [](const Matrix& m) {
    Complex phase = 1.0;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      if (std::abs(m.data()[i]) > 1e-6) {
        phase = m.data()[i] / std::abs(m.data()[i]);
        break;
      }
    }
    std::vector<long long> k;
    k.reserve(static_cast<std::size_t>(2 * m.size()));
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      const Complex z = m.data()[i] / phase;
      k.push_back(std::llround(z.real() * 1e6));
      k.push_back(std::llround(z.imag() * 1e6));
    }
    return k;
  };
  std::set<std::vector<long long>> seen;
  std::deque<Matrix> queue;
  const Matrix id = Matrix::Identity(gens.front().rows(), gens.front().cols());
  seen.insert(key(id));
  queue.push_back(id);
  while (!queue.empty() && seen.size() < limit) {
    const Matrix g = queue.front();
    queue.pop_front();
    for (const auto& h : gens) {
      Matrix next = h * g;
      if (seen.insert(key(next)).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

}  // namespace oracle
