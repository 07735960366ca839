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

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "parabraid/braid_rep.hpp"
#include "parabraid/braid_solver.hpp"
#include "parabraid/clifford_tools.hpp"
#include "parabraid/logical_gates.hpp"
#include "parabraid/parafermion_algebra.hpp"
#include "parabraid/report.hpp"

namespace parabraid {

inline constexpr double kExactTolerance = 1e-12;
inline constexpr double kMatrixTolerance = 1e-10;
inline constexpr std::uint64_t kDefaultSeed = 20150101;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int restarts = 2000;
  int jobs = 1;
  bool timing = false;
};

namespace detail {

inline std::string rep_label(int r, Sign s) { return "r=" + std::to_string(r) + sign_name(s); }

/// max |a - lambda b| with lambda the unit phase fixed by the largest entry of b.
inline double residual_up_to_phase(const DenseOperator& a, const DenseOperator& b) {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  b.matrix().cwiseAbs().maxCoeff(&row, &col);
  Complex lambda = a.matrix()(row, col) / b.matrix()(row, col);
  lambda = std::abs(lambda) > 0.0 ? lambda / std::abs(lambda) : Complex(1.0);
  return max_abs_diff(a, lambda * b);
}

template <class F>
Suite timed(const SuiteOptions& opt, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Suite s = body();
  if (opt.timing) {
    s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return s;
}

inline bool same_pauli_up_to_phase(const std::optional<PauliLabel>& image, const PauliLabel& target) {
  return image && image->x() == target.x() && image->z() == target.z();
}

inline std::string describe(const std::optional<PauliLabel>& p) { return p ? p->to_string() : "not a Pauli monomial"; }

}  // namespace detail

/// Parafermion relations and parity algebra on n_pairs qudits.
inline Suite algebra_suite(int d, int n_pairs, const SuiteOptions& opt = {}) {
  return detail::timed(opt, [&] {
    Suite s{"algebra d=" + std::to_string(d) + " pairs=" + std::to_string(n_pairs), {{"d", d}, {"pairs", n_pairs}}};
    const ParafermionSystem sys(d, n_pairs);
    const auto rel = check_parafermion_relations(sys);
    const auto par = check_parity_algebra(sys);
    s.add(Check::residual("gamma unitary", "parafermion algebra", rel.unitarity, kExactTolerance));
    s.add(Check::residual("gamma^d = 1", "parafermion algebra", rel.power, kExactTolerance));
    s.add(Check::residual("gamma_j gamma_k = omega gamma_k gamma_j (j < k)", "parafermion algebra", rel.exchange,
                          kExactTolerance));
    s.add(Check::residual("Lambda_i^d = 1", "parity operators", par.power, kExactTolerance));
    s.add(Check::residual("Lambda_i Lambda_{i+1} = omega Lambda_{i+1} Lambda_i", "parity commutation", par.adjacent,
                          kExactTolerance));
    if (sys.num_modes() > 3) {
      s.add(Check::residual("far parities commute", "parity commutation", par.far, kExactTolerance));
    }
    return s;
  });
}

/// Coefficient- and matrix-level checks of the quadratic-phase representations for every r and sign.
inline Suite representation_suite(int d, const SuiteOptions& opt = {}) {
  return detail::timed(opt, [&] {
    Suite s{"representation d=" + std::to_string(d), {{"d", d}}};
    std::vector<int> pair_counts = {2};
    if (d <= 4) {
      pair_counts.push_back(3);
    }
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (int r = 0; r < d; ++r) {
        const FZCParams p{d, r, sign};
        const std::string label = detail::rep_label(r, sign);
        const CoefficientVector c = fzc_coefficients(p);
        s.add(Check::residual(label + " unitarity constraint", "unitarity constraint", unitarity_residual(c),
                              kExactTolerance));
        s.add(Check::residual(label + " Yang-Baxter constraint", "Yang-Baxter constraint", yang_baxter_residual(c),
                              kExactTolerance));
        for (int pairs : pair_counts) {
          const auto rep = BraidRepresentation::fzc(pairs, p);
          const auto res = check_representation(rep);
          const std::string tag = label + " pairs=" + std::to_string(pairs);
          s.add(Check::residual(tag + " U_i unitary", "braid relations (matrix)", res.unitarity, kMatrixTolerance));
          s.add(Check::residual(tag + " far commutativity", "braid relations (matrix)", res.far_commutativity,
                                kMatrixTolerance));
          s.add(Check::residual(tag + " Yang-Baxter", "braid relations (matrix)", res.yang_baxter, kMatrixTolerance));
          s.add(Check::residual(tag + " locality", "braid relations (matrix)", res.locality, kMatrixTolerance));
          s.add(Check::residual(tag + " total parity conserved", "parity conservation", res.parity_conservation,
                                kExactTolerance));
        }
      }
    }
    return s;
  });
}

/// gamma_i -> omega^-r gamma_{i+1}, gamma_{i+1} -> omega^(1-r) gamma_i^dagger gamma_{i+1}^2 with exact phases.
inline Suite conjugation_suite(int d, const SuiteOptions& opt = {}) {
  return detail::timed(opt, [&] {
    Suite s{"conjugation d=" + std::to_string(d), {{"d", d}}};
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (int r = 0; r < d; ++r) {
        const auto rep = BraidRepresentation::fzc(2, {d, r, sign});
        for (int i = 1; i <= rep.num_generators(); ++i) {
          const auto act = conjugation_action(rep, i);
          for (const auto* law : {&*act.first_law, &*act.second_law}) {
            const bool first = law == &*act.first_law;
            const std::string name = detail::rep_label(r, sign) + " U_" + std::to_string(i) +
                                     (first ? " gamma_i image" : " gamma_{i+1} image");
            Check c = Check::flag(name, "conjugation law", law->holds(),
                                  "expected " + law->expected.to_string() + ", measured " +
                                      (law->measured ? law->measured->to_string() : std::string("none")));
            s.add(sign == Sign::plus ? std::move(c) : std::move(c).info());
          }
        }
      }
    }
    return s;
  });
}

/// Eigenvalues of U_i are the inverse DFT of c, and check_k = conj(c_k) check_0 exactly.
inline Suite dft_suite(int d, const SuiteOptions& opt = {}) {
  return detail::timed(opt, [&] {
    Suite s{"dft d=" + std::to_string(d), {{"d", d}}};
    for (int r = 0; r < d; ++r) {
      const auto rep = BraidRepresentation::fzc(2, {d, r, Sign::plus});
      const std::string label = detail::rep_label(r, Sign::plus);
      for (int i : {1, 2}) {
        const auto ph = diagonal_phases(rep, i);
        s.add(Check::residual(label + " U_" + std::to_string(i) + " eigenvalues = inverse DFT", "inverse DFT relation",
                              ph.eigenbasis_residual, kExactTolerance));
      }
      const auto ph = diagonal_phases(rep, 1);
      s.add(Check::residual(label + " check_k = conj(c_k) check_0", "inverse DFT relation", ph.closed_form_residual,
                            kExactTolerance));
      s.add(Check::flag(label + " check_0 closed form in the phase ring", "inverse DFT relation",
                        ph.check0_matches_ring, ph.check0_closed_form ? ph.check0_closed_form->to_string() : ""));
    }
    return s;
  });
}

/// Random-restart census of the constraint solutions.
inline Suite solver_suite(int d, const SuiteOptions& opt = {}, nlohmann::json* solution = nullptr) {
  return detail::timed(opt, [&] {
    SolverConfig cfg;
    cfg.d = d;
    cfg.seed = opt.seed;
    cfg.restarts = opt.restarts;
    cfg.jobs = opt.jobs;
    Suite s{"solver d=" + std::to_string(d), {{"d", d}, {"restarts", cfg.restarts}, {"seed", cfg.seed}}};
    const SolverResult res = solve_all(cfg);
    if (solution) {
      *solution = solver_report_json(res);
    }
    std::vector<CoefficientVector> found;
    bool trivial_flagged = false;
    for (const auto& c : res.clusters) {
      if (c.trivial) {
        trivial_flagged = true;
      } else {
        found.push_back(c.representative);
      }
    }
    const auto matches = [&](const std::vector<CoefficientVector>& expected, const std::vector<CoefficientVector>& got) {
      if (expected.size() != got.size()) {
        return false;
      }
      for (const auto& e : expected) {
        const auto hits = std::count_if(got.begin(), got.end(), [&](const auto& g) { return g.distance(e) <= 1e-6; });
        if (hits != 1) {
          return false;
        }
      }
      return true;
    };
    s.add(Check::count("converged restarts", "solution census", res.converged, cfg.restarts).info());
    s.add(Check::flag("trivial solution flagged", "solution census", trivial_flagged).info());
    if (d == 2) {
      s.add(Check::count("nontrivial clusters", "solution census", res.nontrivial_count(), 2));
      const std::vector<CoefficientVector> expected = {{2, {1.0, Complex(0, 1)}}, {2, {1.0, Complex(0, -1)}}};
      s.add(Check::flag("clusters at (1, +i) and (1, -i)", "solution census", matches(expected, found)));
    } else if (d == 3) {
      s.add(Check::count("nontrivial clusters", "solution census", res.nontrivial_count(), 6));
      s.add(Check::flag("clusters match the six tabulated solutions", "solution census",
                        matches(qutrit_solution_table(), found)));
      SolverConfig twice = cfg;
      twice.restarts = 2 * cfg.restarts;
      std::vector<CoefficientVector> again;
      for (const auto& c : solve_all(twice).clusters) {
        if (!c.trivial) {
          again.push_back(c.representative);
        }
      }
      s.add(Check::flag("stable under doubled restarts", "solution census", matches(found, again)));
    } else if (d == 4) {
      double family = 0.0;
      for (Sign sign : {Sign::plus, Sign::minus}) {
        for (int k = 0; k < 64; ++k) {
          const auto c = d4_family(2.0 * std::numbers::pi * k / 64.0, sign);
          family = std::max({family, unitarity_residual(c), yang_baxter_residual(c)});
        }
      }
      s.add(Check::residual("continuous family residual (64 angles x 2 signs)", "continuous d=4 family", family,
                            kExactTolerance));
      int dim_one = 0;
      double off_family = 0.0;
      for (const auto& c : res.clusters) {
        if (c.trivial) {
          continue;
        }
        dim_one += c.manifold_dim == 1 ? 1 : 0;
        const double phi = std::arg(c.representative[1]);
        off_family = std::max(off_family, std::min(c.representative.distance(d4_family(phi, Sign::plus)),
                                                   c.representative.distance(d4_family(phi, Sign::minus))));
      }
      s.add(Check::count("clusters with manifold dimension 1", "continuous d=4 family", dim_one,
                         res.nontrivial_count()));
      s.add(Check::residual("cluster distance to the family", "continuous d=4 family", off_family, 1e-6));
    } else {
      s.add(Check::count("nontrivial clusters", "solution census", res.nontrivial_count(), 2 * d).info());
    }
    return s;
  });
}

/// Single-qudit gate identities on the four-parafermion encoding (canonical representation).
inline Suite single_qudit_gate_suite(int d, const SuiteOptions& opt = {}) {
  return detail::timed(opt, [&] {
    Suite s{"gates d=" + std::to_string(d), {{"d", d}, {"r", 0}, {"sign", "+"}}};
    const Encoding enc(d, 1);
    const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
    const CoefficientVector& c = rep.coefficients();
    const auto check = inverse_dft(c);
    for (int i = 1; i <= 3; ++i) {
      s.add(Check::residual("U_" + std::to_string(i) + " leakage", "code space preservation",
                            enc.restrict(rep.generator(i)).leakage, kLeakageTolerance));
    }
    const Matrix t1 = enc.restrict(rep.generator(1)).logical.matrix();
    const Matrix t2 = enc.restrict(rep.generator(2)).logical.matrix();
    const Matrix t3 = enc.restrict(rep.generator(3)).logical.matrix();
    double diag1 = 0.0;
    double diag3 = 0.0;
    double off2 = 0.0;
    const double inv = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        const Complex e1 = k == l ? check[static_cast<std::size_t>(k)] : Complex(0.0);
        const Complex e3 = k == l ? check[static_cast<std::size_t>(detail::mod(-k, d))] : Complex(0.0);
        diag1 = std::max(diag1, std::abs(t1(k, l) - e1));
        diag3 = std::max(diag3, std::abs(t3(k, l) - e3));
        off2 = std::max(off2, std::abs(t2(k, l) - c[k - l] * inv));
      }
    }
    s.add(Check::residual("T(U_1) = diag(check_c_k)", "logical braid matrices", diag1, kExactTolerance));
    s.add(Check::residual("<k|T(U_2)|l> = c_{k-l}/sqrt(d)", "logical braid matrices", off2, kExactTolerance));
    s.add(Check::residual("T(U_3) = diag(check_c_{-k})", "logical braid matrices", diag3, kExactTolerance));

    const DenseOperator tf = enc.restrict(compose_braid(rep, braid_words::fourier())).logical;
    const Complex c0sq = (fzc_check0(d, 0) * fzc_check0(d, 0)).as_complex();
    s.add(Check::residual("T(U_1 U_2 U_1) = check_c_0^2 F", "DFT gate identity", max_abs_diff(tf, c0sq * fourier_gate(d)),
                          kMatrixTolerance));
    const auto id = identify_logical(tf, c);
    s.add(Check::residual("T(U_1 U_2 U_1) = check_c_0^2 F^dagger", "DFT gate identity",
                          max_abs_diff(tf, c0sq * fourier_gate(d).adjoint()), kMatrixTolerance)
              .info()
              .with_detail("identified as " + id.name +
                           (id.exact_phase ? " with phase " + id.exact_phase->to_string() : std::string())));

    const auto a1 = pauli_conjugation(enc, rep, BraidWord::parse("1"));
    const PauliLabel x_expected(d, {1}, {d - 1}, detail::mod(-(d + 1), 2 * d));
    s.add(Check::flag("T(U_1): X -> omega^(-(d+1)/2) X Z^dagger", "phase-gate conjugation",
                      a1.x(1).image && *a1.x(1).image == x_expected, detail::describe(a1.x(1).image)));
    s.add(Check::flag("T(U_1): Z -> Z", "phase-gate conjugation",
                      a1.z(1).image && *a1.z(1).image == PauliLabel::z_on(d, 1, 1), detail::describe(a1.z(1).image)));

    const auto af = pauli_conjugation(enc, rep, braid_words::fourier());
    s.add(Check::flag("T(U_1 U_2 U_1): X -> Z", "DFT-gate conjugation",
                      detail::same_pauli_up_to_phase(af.x(1).image, PauliLabel::z_on(d, 1, 1)),
                      detail::describe(af.x(1).image)));
    s.add(Check::flag("T(U_1 U_2 U_1): Z -> X^dagger", "DFT-gate conjugation",
                      detail::same_pauli_up_to_phase(af.z(1).image, PauliLabel::x_on(d, 1, 1, -1)),
                      detail::describe(af.z(1).image)));
    s.add(Check::flag("T(U_1), T(U_1 U_2 U_1) are Clifford", "Clifford membership", a1.is_clifford() && af.is_clifford()));
    return s;
  });
}

/// Entangling braids on the eight-parafermion encoding of two qudits.
inline Suite entangling_suite(int d, const SuiteOptions& opt = {}) {
  return detail::timed(opt, [&] {
    Suite s{"entangling d=" + std::to_string(d), {{"d", d}, {"r", 0}, {"sign", "+"}}};
    const Encoding enc(d, 2);
    const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
    const auto ts = enc.restrict(compose_braid(rep, braid_words::s()));
    const auto tt = enc.restrict(compose_braid(rep, braid_words::t()));
    s.add(Check::residual("S leakage", "code space preservation", ts.leakage, kLeakageTolerance));
    s.add(Check::residual("T braid leakage", "code space preservation", tt.leakage, kLeakageTolerance));
    s.add(Check::residual("T(S^dagger) = C_X^2 up to phase", "controlled gate identities",
                          detail::residual_up_to_phase(ts.logical.adjoint(), controlled_x(d, 2)), kGateTolerance));
    s.add(Check::residual("T(T braid) = C_Z^2 up to phase", "controlled gate identities",
                          detail::residual_up_to_phase(tt.logical, controlled_z(d, 2)), kGateTolerance));
    if (d % 2 == 1) {
      const auto tc = enc.restrict(compose_braid(rep, braid_words::s().pow(-(d + 1) / 2)));
      s.add(Check::residual("T(S^-(d+1)/2) = C_X up to phase", "controlled gate identities",
                            detail::residual_up_to_phase(tc.logical, controlled_x(d, 1)), kGateTolerance));
    }
    s.add(Check::residual("C_X^d = 1", "controlled gate identities",
                          max_abs_diff(controlled_x(d, 1).pow(d), DenseOperator::identity(QuditSystem(d, 2))),
                          kExactTolerance));

    for (const auto& row : parity_conjugation_table(rep)) {
      s.add(Check::flag("S: " + row.relation, "entangling parity conjugation", row.holds(),
                        row.exact_phase ? "phase " + row.exact_phase->to_string() : std::string()));
    }
    const auto act = pauli_conjugation(enc, rep, braid_words::s());
    const auto x = [&](int i, int p) { return PauliLabel::x_on(d, 2, i, p); };
    const auto z = [&](int i, int p) { return PauliLabel::z_on(d, 2, i, p); };
    const std::vector<std::pair<const PauliImage*, PauliLabel>> expected = {
        {&act.z(1), z(1, 1)}, {&act.x(1), x(1, 1) * x(2, -2)}, {&act.z(2), z(1, 2) * z(2, 1)}, {&act.x(2), x(2, 1)}};
    for (const auto& [img, target] : expected) {
      s.add(Check::flag("S: " + img->input.to_string() + " -> " + target.to_string(), "entangling Pauli conjugation",
                        img->image && *img->image == target, detail::describe(img->image)));
    }

    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (int r = 0; r < d; ++r) {
        if (r == 0 && sign == Sign::plus) {
          continue;
        }
        const auto other = enc.representation(FZCParams{d, r, sign});
        const auto os = enc.restrict(compose_braid(other, braid_words::s()));
        const auto ot = enc.restrict(compose_braid(other, braid_words::t()));
        const std::string label = detail::rep_label(r, sign);
        s.add(Check::residual(label + " T(S^dagger) = C_X^2 up to phase", "controlled gates, other representations",
                              detail::residual_up_to_phase(os.logical.adjoint(), controlled_x(d, 2)), kGateTolerance)
                  .info()
                  .with_detail("identified as " + identify_logical(os.logical.adjoint(), other.coefficients()).name));
        s.add(Check::residual(label + " T(T braid) = C_Z^2 up to phase", "controlled gates, other representations",
                              detail::residual_up_to_phase(ot.logical, controlled_z(d, 2)), kGateTolerance)
                  .info()
                  .with_detail("identified as " + identify_logical(ot.logical, other.coefficients()).name));
      }
    }
    return s;
  });
}

/// Tableau closure of braid-derived gates against the reference generators and the order oracle.
inline Suite clifford_suite(int d, int n, const SuiteOptions& opt = {}, nlohmann::json* closure_report = nullptr) {
  return detail::timed(opt, [&] {
    Suite s{"clifford d=" + std::to_string(d) + " n=" + std::to_string(n), {{"d", d}, {"n", n}}};
    const Encoding enc(d, n);
    const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
    const auto braid_gens = n == 1 ? braid_single_qudit_generators(enc, rep) : braid_two_qudit_generators(enc, rep);
    const CliffordGroup braid = closure(braid_gens);
    const CliffordGroup ref = closure(reference_generators(d, n));
    const auto oracle = static_cast<double>(clifford_group_order(d, n));
    const auto sp = static_cast<double>(symplectic_group_order(d, n));
    // Only the single-qudit and odd-d two-qudit statements are claimed.
    const bool claimed = n == 1 || d % 2 == 1;
    const auto claim = [&](Check c) { return claimed ? std::move(c) : std::move(c).info(); };
    s.add(Check::count("reference closure order", "Clifford closure", static_cast<double>(ref.order()), oracle));
    s.add(claim(Check::count("braid closure order", "Clifford closure", static_cast<double>(braid.order()), oracle)));
    s.add(claim(Check::flag("braid closure = reference closure", "Clifford closure", braid == ref)));
    s.add(claim(Check::count("braid closure modulo Paulis", "Clifford closure modulo Paulis",
                             static_cast<double>(braid.symplectic_order()), sp)));
    s.add(Check::count("Pauli operators in braid closure", "Clifford closure modulo Paulis",
                       static_cast<double>(braid.pauli_order()), std::pow(static_cast<double>(d), 2 * n))
              .info());
    if (closure_report) {
      *closure_report = {{"d", d},
                         {"n", n},
                         {"generator_set", "braid"},
                         {"order", braid.order()},
                         {"reference_order", ref.order()},
                         {"oracle_order", clifford_group_order(d, n)},
                         {"matched_reference", braid == ref}};
    }
    return s;
  });
}

/// Everything up to d_max: the aggregate behind `report-all`.
inline RunReport report_all(int d_max, const SuiteOptions& opt) {
  if (d_max < 2 || d_max > 7) {
    throw std::invalid_argument("report_all: d_max must be in 2..7");
  }
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rr{"report-all", {{"d_max", d_max}, {"restarts", opt.restarts}}, opt.seed};
  for (int d = 2; d <= std::min(d_max, 6); ++d) {
    for (int pairs = 1; pairs <= 3; ++pairs) {
      rr.suites.push_back(algebra_suite(d, pairs, opt));
    }
  }
  for (int d = 2; d <= d_max; ++d) {
    rr.suites.push_back(representation_suite(d, opt));
  }
  for (int d = 2; d <= std::min(d_max, 6); ++d) {
    rr.suites.push_back(conjugation_suite(d, opt));
  }
  for (int d = 2; d <= d_max; ++d) {
    rr.suites.push_back(dft_suite(d, opt));
  }
  for (int d = 2; d <= std::min(d_max, 5); ++d) {
    rr.suites.push_back(solver_suite(d, opt));
  }
  for (int d = 2; d <= std::min(d_max, 5); ++d) {
    rr.suites.push_back(single_qudit_gate_suite(d, opt));
  }
  for (int d = 2; d <= std::min(d_max, 5); ++d) {
    rr.suites.push_back(entangling_suite(d, opt));
  }
  for (int d = 2; d <= std::min(d_max, 5); ++d) {
    rr.suites.push_back(clifford_suite(d, 1, opt));
  }
  if (d_max >= 3) {
    rr.suites.push_back(clifford_suite(3, 2, opt));
  }
  if (opt.timing) {
    rr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return rr;
}

}  // namespace parabraid
