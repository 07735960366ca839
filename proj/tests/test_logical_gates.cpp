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

#include "oracles.hpp"
#include "parabraid/logical_gates.hpp"

namespace parabraid {
namespace {

class SingleQuditTest : public ::testing::TestWithParam<int> {};

TEST_P(SingleQuditTest, EncodingIsAnIsometry) {
  const int d = GetParam();
  const Encoding enc(d, 1);
  const oracle::Matrix& e = enc.isometry();
  EXPECT_EQ(e.cols(), d);
  EXPECT_LT((e.adjoint() * e - oracle::Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-13);
  // code space: Lambda_1 Lambda_3 = 1
  const auto& sys = enc.parafermions();
  EXPECT_LT(((sys.parity(1) * sys.parity(3)).matrix() * e - e).cwiseAbs().maxCoeff(), 1e-13);
}

TEST_P(SingleQuditTest, ParitiesActAsPaulis) {
  const int d = GetParam();
  const Encoding enc(d, 1);
  const QuditSystem& l = enc.logical_system();
  const auto& sys = enc.parafermions();
  const auto t1 = enc.restrict(sys.parity(1));
  const auto t2 = enc.restrict(sys.parity(2));
  EXPECT_LE(t1.leakage, 1e-12);
  EXPECT_LE(t2.leakage, 1e-12);
  EXPECT_LT(max_abs_diff(t1.logical, pauli_z(l, 1)), 1e-12);
  EXPECT_LT(max_abs_diff(t2.logical, pauli_x(l, 1)), 1e-12);
}

TEST_P(SingleQuditTest, GeneratorMatrixForms) {
  const int d = GetParam();
  const Encoding enc(d, 1);
  for (int r = 0; r < d; ++r) {
    const auto rep = enc.representation(FZCParams{d, r, Sign::plus});
    const auto& c = rep.coefficients();
    const auto t1 = enc.restrict(rep.generator(1));
    const auto t2 = enc.restrict(rep.generator(2));
    const auto t3 = enc.restrict(rep.generator(3));
    EXPECT_LE(std::max({t1.leakage, t2.leakage, t3.leakage}), 1e-12);
    const auto check = inverse_dft(c);
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        // <k|T(U2)|l> = c_{k-l} / sqrt(d)
        EXPECT_LT(std::abs(t2.logical(k, l) - c[k - l] / std::sqrt(static_cast<double>(d))), 1e-12);
        const Complex diag1 = k == l ? check[static_cast<std::size_t>(k)] : 0.0;
        const Complex diag3 = k == l ? check[static_cast<std::size_t>((d - k) % d)] : 0.0;
        EXPECT_LT(std::abs(t1.logical(k, l) - diag1), 1e-12);
        EXPECT_LT(std::abs(t3.logical(k, l) - diag3), 1e-12);
      }
    }
  }
}

TEST_P(SingleQuditTest, FourierBraidIsInverseFourier) {
  const int d = GetParam();
  const Encoding enc(d, 1);
  for (int r = 0; r < d; ++r) {
    const auto rep = enc.representation(FZCParams{d, r, Sign::plus});
    const auto t = enc.restrict(compose_braid(rep, braid_words::fourier()));
    const Complex c0 = inverse_dft(rep.coefficients())[0];
    const auto fdag = fourier_gate(d).adjoint();
    // independent construction of Z^(-2r)
    oracle::Matrix zr = oracle::Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
      zr(k, k) = oracle::omega(d, -2.0 * r * k);
    }
    const oracle::Matrix expected = c0 * c0 * fdag.matrix() * zr;
    EXPECT_LT((t.logical.matrix() - expected).cwiseAbs().maxCoeff(), 1e-12) << "d=" << d << " r=" << r;
    const double vs_f = max_abs_diff(t.logical, (c0 * c0) * fourier_gate(d));
    if (d == 2 && r == 0) {
      EXPECT_LT(vs_f, 1e-12);
    }
    if (d > 2 && r == 0) {
      EXPECT_GT(vs_f, 0.5);
    }
  }
}

TEST_P(SingleQuditTest, PhaseGateConjugation) {
  const int d = GetParam();
  const Encoding enc(d, 1);
  for (int r = 0; r < d; ++r) {
    const auto rep = enc.representation(FZCParams{d, r, Sign::plus});
    const auto act = pauli_conjugation(enc, rep, BraidWord::parse("1"));
    ASSERT_TRUE(act.x(1).image && act.z(1).image);
    // X -> omega^(-(2r+d+1)/2) X Z^dagger, Z -> Z; phase label counts e^{i pi/d}
    const PauliLabel want_x = PauliLabel(d, {1}, {-1}).with_phase(-(2 * r + d + 1));
    EXPECT_EQ(*act.x(1).image, want_x) << act.x(1).image->to_string();
    EXPECT_EQ(*act.z(1).image, PauliLabel::z_on(d, 1, 1));
  }
}

TEST_P(SingleQuditTest, FourierConjugationTable) {
  const int d = GetParam();
  const Encoding enc(d, 1);
  const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
  const auto act = pauli_conjugation(enc, rep, braid_words::fourier());
  ASSERT_TRUE(act.is_clifford());
  // F^dagger: X -> Z^dagger, Z -> X
  EXPECT_EQ(*act.x(1).image, PauliLabel::z_on(d, 1, 1, -1));
  EXPECT_EQ(*act.z(1).image, PauliLabel::x_on(d, 1, 1));
}

TEST_P(SingleQuditTest, Identification) {
  const int d = GetParam();
  const Encoding enc(d, 1);
  const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
  const auto f = identify_gate(enc, rep, braid_words::fourier());
  EXPECT_EQ(f.name, d == 2 ? "F" : "F^dagger");
  ASSERT_TRUE(f.exact_phase.has_value());
  EXPECT_EQ(*f.exact_phase, fzc_check0(d, 0).pow(2));
  EXPECT_EQ(identify_gate(enc, rep, BraidWord::parse("1")).name, "diag(check_c)");
  EXPECT_EQ(identify_gate(enc, rep, BraidWord::parse("1 2 1").pow(4)).name, "identity");
}

INSTANTIATE_TEST_SUITE_P(Dims, SingleQuditTest, ::testing::Values(2, 3, 4, 5),
                         [](const auto& info) { return "d" + std::to_string(info.param); });

class TwoQuditTest : public ::testing::TestWithParam<int> {};

TEST_P(TwoQuditTest, GeneratorLeakage) {
  const int d = GetParam();
  const Encoding enc(d, 2);
  const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
  for (int i = 1; i <= 7; ++i) {
    const double leak = enc.restrict(rep.generator(i)).leakage;
    if (i == 4) {
      EXPECT_GT(leak, 1e-2) << "U4 couples the two quadruplets";
    } else {
      EXPECT_LE(leak, 1e-10) << "i=" << i;
    }
  }
  EXPECT_THROW(identify_gate(enc, rep, BraidWord::parse("4")), LeakageError);
}

TEST_P(TwoQuditTest, EntanglingBraids) {
  const int d = GetParam();
  const Encoding enc(d, 2);
  const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
  const auto s = enc.restrict(compose_braid(rep, braid_words::s().inverse()));
  const auto t = enc.restrict(compose_braid(rep, braid_words::t()));
  EXPECT_LE(s.leakage, 1e-10);
  EXPECT_LE(t.leakage, 1e-10);
  // independent C_X^2 and C_Z^2 from the oracle Paulis
  oracle::Matrix cx2 = oracle::Matrix::Zero(d * d, d * d);
  oracle::Matrix cz2 = oracle::Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cx2(i * d + (j + 2 * i) % d, i * d + j) = 1.0;
      cz2(i * d + j, i * d + j) = oracle::omega(d, 2.0 * i * j);
    }
  }
  const QuditSystem two(d, 2);
  EXPECT_TRUE(equal_up_to_phase(s.logical, DenseOperator(two, cx2), 1e-9).has_value());
  EXPECT_TRUE(equal_up_to_phase(t.logical, DenseOperator(two, cz2), 1e-9).has_value());
  const auto id = identify_logical(t.logical, rep.coefficients());
  EXPECT_EQ(id.name, d == 2 ? "identity" : "C_Z^2");
}

TEST_P(TwoQuditTest, ControlledShiftPowers) {
  const int d = GetParam();
  const QuditSystem two(d, 2);
  EXPECT_LT(max_abs_diff(controlled_x(d).pow(d), DenseOperator::identity(two)), 1e-12);
  EXPECT_LT(max_abs_diff(controlled_z(d).pow(d), DenseOperator::identity(two)), 1e-12);
  EXPECT_LT(max_abs_diff(controlled_x(d, 2), controlled_x(d).pow(2)), 1e-12);
  // C_Z = (1 x F) C_X (1 x F^dagger)
  const DenseOperator f2 = DenseOperator(two, kron(oracle::Matrix::Identity(d, d), fourier_gate(d).matrix()));
  EXPECT_LT(max_abs_diff(controlled_z(d), f2 * controlled_x(d) * f2.adjoint()), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Dims, TwoQuditTest, ::testing::Values(2, 3, 4, 5),
                         [](const auto& info) { return "d" + std::to_string(info.param); });

TEST(Entangling, ParityTable) {
  for (int d = 2; d <= 4; ++d) {
    const Encoding enc(d, 2);
    const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
    for (const auto& row : parity_conjugation_table(rep)) {
      EXPECT_TRUE(row.holds()) << "d=" << d << " " << row.relation;
      EXPECT_TRUE(row.exact_phase.has_value()) << "d=" << d << " " << row.relation;
    }
  }
}

TEST(Entangling, OddPowerIsControlledShift) {
  for (int d : {3, 5}) {
    const Encoding enc(d, 2);
    const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
    const auto id = identify_gate(enc, rep, braid_words::s().pow(-(d + 1) / 2));
    EXPECT_EQ(id.name, "C_X^1") << "d=" << d;
  }
}

TEST(Entangling, PauliActionOfS) {
  const int d = 3;
  const Encoding enc(d, 2);
  const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
  const auto act = pauli_conjugation(enc, rep, braid_words::s().pow(-2));
  ASSERT_TRUE(act.is_clifford());
  // C_X: X1 -> X1 X2, Z1 -> Z1, X2 -> X2, Z2 -> Z1^dagger Z2
  EXPECT_EQ(*act.x(1).image, PauliLabel::x_on(d, 2, 1) * PauliLabel::x_on(d, 2, 2));
  EXPECT_EQ(*act.z(1).image, PauliLabel::z_on(d, 2, 1));
  EXPECT_EQ(*act.x(2).image, PauliLabel::x_on(d, 2, 2));
  EXPECT_EQ(*act.z(2).image, PauliLabel::z_on(d, 2, 1, -1) * PauliLabel::z_on(d, 2, 2));
}

TEST(Encoding, Validation) {
  EXPECT_THROW(Encoding(3, 3), std::invalid_argument);
  const Encoding enc(3, 1);
  EXPECT_THROW(enc.restrict(DenseOperator::identity(QuditSystem(3, 1))), std::invalid_argument);
  EXPECT_THROW(enc.representation(FZCParams{4, 0, Sign::plus}), std::invalid_argument);
}

TEST(GateReport, Json) {
  const Encoding enc(3, 1);
  const auto rep = enc.representation(FZCParams{3, 0, Sign::plus});
  const auto id = identify_gate(enc, rep, braid_words::fourier());
  const auto j = gate_report_json("1 2 1", id);
  EXPECT_EQ(j.at("gate"), "F^dagger");
  EXPECT_EQ(j.at("word"), "1 2 1");
  EXPECT_EQ(j.at("phase_exponent_mod_8d"), fzc_check0(3, 0).pow(2).num());
  EXPECT_LE(j.at("leakage").get<double>(), 1e-10);
}

}  // namespace
}  // namespace parabraid
