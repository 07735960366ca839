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

// parabraid: command-line driver for the verification suites.
//
// Exit codes: 0 all asserted checks pass, 1 a check failed, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "parabraid/suites.hpp"

namespace {

using namespace parabraid;

constexpr int kExitUsage = 2;

struct Common {
  std::string out;
  std::string markdown;
  bool timing = false;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot write " + path);
  }
  f << text;
}

int emit(const RunReport& report, const Common& common) {
  const nlohmann::json j = report.to_json();
  const std::string text = j.dump(2) + "\n";
  if (common.out.empty()) {
    std::cout << text;
  } else {
    write_text(common.out, text);
  }
  if (!common.markdown.empty()) {
    write_text(common.markdown, report_markdown(j));
  }
  std::cerr << report.command << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.exit_code();
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") {
    return Sign::plus;
  }
  return Sign::minus;
}

BraidWord parse_braid(const std::string& text) {
  if (text == "F") {
    return braid_words::fourier();
  }
  if (text == "S") {
    return braid_words::s();
  }
  if (text == "T") {
    return braid_words::t();
  }
  return BraidWord::parse(text);
}

template <class F>
RunReport run(const std::string& command, const nlohmann::json& params, std::uint64_t seed, const Common& common,
              F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report{command, params, seed};
  body(report);
  if (common.timing) {
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for parafermion braid representations and their logical gates"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "Write the JSON report to this file instead of stdout");
  app.add_option("--markdown", common.markdown, "Also write a Markdown summary to this file");
  app.add_flag("--timing", common.timing, "Include wall-clock times in the report");

  int d = 3;
  int pairs = 2;
  auto* algebra = app.add_subcommand("algebra", "Parafermion relations and parity algebra");
  algebra->add_option("--d", d, "Qudit dimension")->required()->check(CLI::Range(2, 16));
  algebra->add_option("--pairs", pairs, "Number of parafermion pairs")->check(CLI::Range(1, 12));

  SuiteOptions opt;
  auto* solve = app.add_subcommand("solve", "Random-restart search for all constraint solutions");
  solve->add_option("--d", d, "Qudit dimension")->required()->check(CLI::Range(2, 6));
  solve->add_option("--restarts", opt.restarts, "Number of random restarts")->check(CLI::Range(1, 1000000));
  solve->add_option("--seed", opt.seed, "Random seed");
  solve->add_option("--jobs", opt.jobs, "Worker threads for restarts")->check(CLI::Range(1, 256));

  int r = 0;
  std::string sign = "+";
  std::string braid = "F";
  auto* gates = app.add_subcommand("gates", "Restrict a braid to the code space and identify the gate");
  gates->add_option("--d", d, "Qudit dimension")->required()->check(CLI::Range(2, 7));
  gates->add_option("--r", r, "Representation index r");
  gates->add_option("--sign", sign, "Representation sign")->check(CLI::IsMember({"+", "-", "plus", "minus"}));
  gates->add_option("--braid", braid, "F, S, T or a braid word such as \"1 2 -1\"");

  int n = 1;
  std::string generators = "braid";
  auto* clifford = app.add_subcommand("clifford", "Tableau closure of braid-derived or reference generators");
  clifford->add_option("--d", d, "Qudit dimension")->required()->check(CLI::Range(2, 8));
  clifford->add_option("--n", n, "Number of logical qudits")->check(CLI::Range(1, 2));
  clifford->add_option("--generators", generators, "braid or reference")->check(CLI::IsMember({"braid", "reference"}));

  int d_max = 5;
  auto* all = app.add_subcommand("report-all", "Run every suite up to --d-max and write JSON and Markdown");
  all->add_option("--d-max", d_max, "Largest qudit dimension")->check(CLI::Range(2, 7));
  all->add_option("--seed", opt.seed, "Random seed for the solver");
  all->add_option("--restarts", opt.restarts, "Solver restarts per dimension")->check(CLI::Range(1, 1000000));
  all->add_option("--jobs", opt.jobs, "Worker threads for solver restarts")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  opt.timing = common.timing;

  try {
    if (*algebra) {
      return emit(run("algebra", {{"d", d}, {"pairs", pairs}}, opt.seed, common,
                      [&](RunReport& rr) { rr.suites.push_back(algebra_suite(d, pairs, opt)); }),
                  common);
    }
    if (*solve) {
      return emit(run("solve", {{"d", d}, {"restarts", opt.restarts}, {"jobs", opt.jobs}}, opt.seed, common,
                      [&](RunReport& rr) {
                        nlohmann::json solution;
                        rr.suites.push_back(solver_suite(d, opt, &solution));
                        rr.artifacts["solution"] = solution;
                      }),
                  common);
    }
    if (*gates) {
      const BraidWord word = parse_braid(braid);
      if (word.max_index() > 7) {
        throw std::invalid_argument("braid words act on at most eight parafermions (generators 1..7)");
      }
      const FZCParams params{d, r, parse_sign(sign)};
      return emit(run("gates", {{"d", d}, {"r", r}, {"sign", sign_name(params.sign)}, {"braid", braid}}, opt.seed,
                      common,
                      [&](RunReport& rr) {
                        const Encoding enc(d, word.max_index() <= 3 ? 1 : 2);
                        const auto rep = enc.representation(params);
                        const Restriction t = enc.restrict(compose_braid(rep, word));
                        Suite s{"gate " + word.to_string(), {{"word", word.to_string()}}};
                        s.add(Check::residual("leakage", "code space preservation", t.leakage, kLeakageTolerance));
                        nlohmann::json gate;
                        if (t.preserves_subspace()) {
                          const auto id = identify_logical(t.logical, rep.coefficients(), t.leakage);
                          gate = gate_report_json(word.to_string(), id);
                          s.add(Check::flag("identified", "gate identification", id.known(), id.name).info());
                          const auto act = pauli_action(t.logical, t.leakage);
                          s.add(Check::flag("Clifford", "Clifford membership", act.is_clifford()).info());
                          nlohmann::json images = nlohmann::json::object();
                          for (const auto& e : act.entries) {
                            images[e.input.to_string()] = e.image ? e.image->to_string() : "not a Pauli monomial";
                          }
                          gate["pauli_conjugation"] = images;
                        } else {
                          gate = {{"word", word.to_string()},
                                  {"gate", "leaks"},
                                  {"phase_exponent_mod_8d", nullptr},
                                  {"leakage", t.leakage}};
                        }
                        rr.suites.push_back(std::move(s));
                        rr.artifacts["gate"] = gate;
                      }),
                  common);
    }
    if (*clifford) {
      return emit(run("clifford", {{"d", d}, {"n", n}, {"generators", generators}}, opt.seed, common,
                      [&](RunReport& rr) {
                        const auto t0 = std::chrono::steady_clock::now();
                        const Encoding enc(d, n);
                        const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});
                        std::vector<CliffordTableau> gens;
                        if (generators == "reference") {
                          gens = reference_generators(d, n);
                        } else {
                          gens = n == 1 ? braid_single_qudit_generators(enc, rep) : braid_two_qudit_generators(enc, rep);
                        }
                        Suite s{"clifford d=" + std::to_string(d) + " n=" + std::to_string(n),
                                {{"generators", generators}}};
                        nlohmann::json report = {{"d", d}, {"n", n}, {"generator_set", generators}};
                        try {
                          const CliffordGroup g = closure(gens);
                          const CliffordGroup ref = generators == "reference" ? g : closure(reference_generators(d, n));
                          s.add(Check::count("closure order", "Clifford closure", static_cast<double>(g.order()),
                                             static_cast<double>(clifford_group_order(d, n))));
                          s.add(Check::flag("matches reference closure", "Clifford closure", g == ref));
                          s.add(Check::count("closure modulo Paulis", "Clifford closure modulo Paulis",
                                             static_cast<double>(g.symplectic_order()),
                                             static_cast<double>(symplectic_group_order(d, n)))
                                    .info());
                          report["order"] = g.order();
                          report["matched_reference"] = g == ref;
                        } catch (const ClosureLimitExceeded& e) {
                          s.add(Check::flag("closure within limit", "Clifford closure", false, e.what()));
                          report["order"] = nullptr;
                          report["matched_reference"] = false;
                        }
                        report["elapsed_ms"] =
                            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                        rr.suites.push_back(std::move(s));
                        rr.artifacts["closure"] = report;
                      }),
                  common);
    }
    if (*all) {
      Common c = common;
      if (!c.out.empty() && c.markdown.empty()) {
        c.markdown = std::filesystem::path(c.out).replace_extension(".md").string();
      }
      RunReport rr = report_all(d_max, opt);
      rr.parameters["jobs"] = opt.jobs;
      return emit(rr, c);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
