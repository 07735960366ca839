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

#include "oracles.hpp"
#include "parabraid/braid_constraints.hpp"

namespace parabraid {
namespace {

CoefficientVector random_coefficients(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> v;
  for (int m = 0; m < d; ++m) {
    v.emplace_back(g(rng), g(rng));
  }
  return {d, std::move(v)};
}

TEST(FZC, MatchesPolarFormula) {
  for (int d = 2; d <= 7; ++d) {
    for (int r = 0; r < d; ++r) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const auto c = fzc_coefficients({d, r, s});
        for (int m = 0; m < d; ++m) {
          const double e = sign_value(s) * m * (m + 2.0 * r + d) / 2.0;
          EXPECT_LT(std::abs(c[m] - oracle::omega(d, e)), 1e-13);
        }
      }
    }
  }
}

TEST(FZC, SolvesBothConstraints) {
  for (int d = 2; d <= 7; ++d) {
    for (int r = 0; r < d; ++r) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const auto c = fzc_coefficients({d, r, s});
        EXPECT_LE(unitarity_residual(c), 1e-12) << d << " " << r;
        EXPECT_LE(yang_baxter_residual(c), 1e-12) << d << " " << r;
      }
    }
  }
}

TEST(FZC, CountsDistinctSolutions) {
  // 2d solutions for d >= 3; at d = 2 the two signs coincide pairwise.
  for (int d = 2; d <= 7; ++d) {
    std::vector<CoefficientVector> distinct;
    for (int r = 0; r < d; ++r) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const auto c = fzc_coefficients({d, r, s});
        if (std::none_of(distinct.begin(), distinct.end(), [&](const auto& o) { return o.distance(c) < 1e-9; })) {
          distinct.push_back(c);
        }
      }
    }
    EXPECT_EQ(static_cast<int>(distinct.size()), d == 2 ? 2 : 2 * d) << "d=" << d;
  }
}

TEST(Constraints, TrivialSolution) {
  for (int d = 2; d <= 7; ++d) {
    const auto c = trivial_solution(d);
    EXPECT_LE(unitarity_residual(c), 1e-12);
    EXPECT_LE(yang_baxter_residual(c), 1e-12);
    EXPECT_TRUE(is_trivial(c, 1e-12));
    EXPECT_FALSE(is_trivial(fzc_coefficients({d, 0, Sign::plus}), 1e-6));
  }
}

TEST(Constraints, RandomVectorsViolate) {
  std::mt19937_64 rng(11);
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 10; ++t) {
      const auto c = random_coefficients(d, rng);
      EXPECT_GT(std::max(unitarity_residual(c), yang_baxter_residual(c)), 1e-3);
    }
  }
}

TEST(Constraints, UnitarityComponentsDirect) {
  std::mt19937_64 rng(3);
  const auto c = random_coefficients(4, rng);
  const auto u = unitarity_components(c);
  for (int r = 0; r < 4; ++r) {
    Complex s = 0.0;
    for (int m = 0; m < 4; ++m) {
      s += c.values()[static_cast<std::size_t>(m)] * std::conj(c.values()[static_cast<std::size_t>((m + r) % 4)]);
    }
    EXPECT_LT(std::abs(u[static_cast<std::size_t>(r)] - (s - (r == 0 ? 4.0 : 0.0))), 1e-12);
  }
}

TEST(Qutrit, TableRowsFromAppendix) {
  const Complex w = oracle::omega(3);
  const Complex wb = std::conj(w);
  const std::vector<std::array<Complex, 3>> expected = {
      {1.0, 1.0, w}, {1.0, wb, wb}, {1.0, w, 1.0}, {1.0, wb, 1.0}, {1.0, 1.0, wb}, {1.0, w, w}};
  const auto table = qutrit_solution_table();
  ASSERT_EQ(table.size(), expected.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (int m = 0; m < 3; ++m) {
      EXPECT_LT(std::abs(table[i][m] - expected[i][static_cast<std::size_t>(m)]), 1e-14) << "row " << i;
    }
  }
}

TEST(Qutrit, TableSolvesGenericAndSpecialisedEquations) {
  for (const auto& c : qutrit_solution_table()) {
    EXPECT_LE(unitarity_residual(c), 1e-12);
    EXPECT_LE(yang_baxter_residual(c), 1e-12);
    for (const auto& e : qutrit_constraint_equations(c)) {
      EXPECT_LT(std::abs(e), 1e-12);
    }
  }
}

TEST(Qutrit, SpecialisedEquationsAgreeWithGeneric) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_coefficients(3, rng);
    double special = 0.0;
    for (const auto& e : qutrit_constraint_equations(c)) {
      special = std::max(special, std::abs(e));
    }
    EXPECT_GT(special, 1e-6);
    EXPECT_GT(std::max(unitarity_residual(c), yang_baxter_residual(c)), 1e-6);
  }
  EXPECT_THROW(qutrit_constraint_equations(trivial_solution(4)), std::invalid_argument);
}

TEST(Qutrit, TableIsTheFZCSet) {
  for (const auto& c : qutrit_solution_table()) {
    bool found = false;
    for (int r = 0; r < 3; ++r) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        found = found || gauge_fix(fzc_coefficients({3, r, s})).c.distance(c) < 1e-12;
      }
    }
    EXPECT_TRUE(found) << c.to_string();
  }
}

TEST(Ququart, FamilySolvesConstraints) {
  for (int k = 0; k < 64; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 64.0;
    for (Sign s : {Sign::plus, Sign::minus}) {
      const auto c = d4_family(phi, s);
      EXPECT_LE(unitarity_residual(c), 1e-12);
      EXPECT_LE(yang_baxter_residual(c), 1e-12);
      for (const auto& e : ququart_constraint_equations(c)) {
        EXPECT_LT(std::abs(e), 1e-12);
      }
    }
  }
}

TEST(Symmetry, MapsSolutionsToSolutions) {
  for (int d = 2; d <= 6; ++d) {
    for (int r = 0; r < d; ++r) {
      const auto c = fzc_coefficients({d, r, Sign::plus});
      for (const Symmetry& s : std::vector<Symmetry>{GlobalPhase{0.3}, Twist{}, ConjugateReverse{}}) {
        const auto t = apply_symmetry(c, s);
        EXPECT_LE(unitarity_residual(t), 1e-12);
        EXPECT_LE(yang_baxter_residual(t), 1e-12);
      }
    }
  }
}

TEST(Symmetry, TwistShiftsR) {
  // omega^n c_n with c from r gives the solution with r + 1 up to global phase.
  for (int d = 3; d <= 6; ++d) {
    const auto twisted = apply_symmetry(fzc_coefficients({d, 0, Sign::plus}), Twist{});
    EXPECT_LT(twisted.distance(gauge_fix(fzc_coefficients({d, 1, Sign::plus})).c), 1e-12);
  }
}

TEST(Gauge, FixesFirstNonzero) {
  const CoefficientVector c(3, {0.0, Complex(0.0, 2.0), Complex(1.0, 1.0)});
  const auto g = gauge_fix(c);
  EXPECT_EQ(g.anchor, 1);
  EXPECT_LT(std::abs(g.c[1] - 2.0), 1e-15);
  EXPECT_LT(std::abs(g.c[2] - Complex(1.0, -1.0)), 1e-15);
  EXPECT_EQ(gauge_fix(CoefficientVector(2, {0.0, 0.0})).anchor, -1);
}

TEST(CoefficientVector, JsonRoundTripAndValidation) {
  const auto c = fzc_coefficients({5, 2, Sign::minus});
  nlohmann::json j = c;
  EXPECT_LT(coefficient_vector_from_json(j).distance(c), 1e-15);
  EXPECT_THROW(CoefficientVector(3, {1.0, 2.0}), std::invalid_argument);
  EXPECT_EQ(c[7], c[2]);
  EXPECT_EQ(c[-1], c[4]);
}

}  // namespace
}  // namespace parabraid
