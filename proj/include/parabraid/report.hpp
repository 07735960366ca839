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
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace parabraid {

inline constexpr const char* kReportVersion = "1";

/// One verification result. Residual checks pass when value <= tolerance, count and exact
/// checks when value == expected, flags when value == 1.
struct Check {
  enum class Kind { residual, count, flag };

  std::string name;
  std::string relation;  // row label of the Markdown summary
  Kind kind = Kind::flag;
  double value = 0.0;
  std::optional<double> expected;
  std::optional<double> tolerance;
  bool asserted = true;
  bool passed = false;
  std::string detail;

  static Check residual(std::string name, std::string relation, double value, double tolerance) {
    Check c{std::move(name), std::move(relation), Kind::residual, value, std::nullopt, tolerance};
    c.passed = std::isfinite(value) && value <= tolerance;
    return c;
  }

  static Check count(std::string name, std::string relation, double value, double expected) {
    Check c{std::move(name), std::move(relation), Kind::count, value, expected, std::nullopt};
    c.passed = value == expected;
    return c;
  }

  static Check flag(std::string name, std::string relation, bool ok, std::string detail = {}) {
    Check c{std::move(name), std::move(relation), Kind::flag, ok ? 1.0 : 0.0};
    c.passed = ok;
    c.detail = std::move(detail);
    return c;
  }

  /// Recorded but not asserted.
  Check info() && {
    asserted = false;
    return std::move(*this);
  }

  Check with_detail(std::string text) && {
    detail = std::move(text);
    return std::move(*this);
  }
};

inline const char* kind_name(Check::Kind k) {
  switch (k) {
    case Check::Kind::residual:
      return "residual";
    case Check::Kind::count:
      return "count";
    case Check::Kind::flag:
      return "flag";
  }
  return "flag";
}

inline void to_json(nlohmann::json& j, const Check& c) {
  j = {{"name", c.name},         {"relation", c.relation}, {"kind", kind_name(c.kind)},
       {"value", c.value},       {"asserted", c.asserted}, {"passed", c.passed}};
  j["expected"] = c.expected ? nlohmann::json(*c.expected) : nlohmann::json(nullptr);
  j["tolerance"] = c.tolerance ? nlohmann::json(*c.tolerance) : nlohmann::json(nullptr);
  if (!c.detail.empty()) {
    j["detail"] = c.detail;
  }
}

struct Suite {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Check> checks;
  std::optional<double> elapsed_ms;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.asserted || c.passed; });
  }

  Check& add(Check c) {
    checks.push_back(std::move(c));
    return checks.back();
  }
};

inline void to_json(nlohmann::json& j, const Suite& s) {
  j = {{"name", s.name}, {"parameters", s.parameters}, {"passed", s.passed()}, {"checks", s.checks}};
  if (s.elapsed_ms) {
    j["elapsed_ms"] = *s.elapsed_ms;
  }
}

/// Result of one CLI command. Exit code 0 iff every asserted check passed.
struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<Suite> suites;
  nlohmann::json artifacts = nlohmann::json::object();
  std::optional<double> wall_ms;

  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const Suite& s) { return s.passed(); });
  }
  int exit_code() const { return passed() ? 0 : 1; }

  nlohmann::json to_json() const {
    std::size_t total = 0;
    std::size_t asserted = 0;
    std::size_t failed = 0;
    for (const auto& s : suites) {
      for (const auto& c : s.checks) {
        ++total;
        if (c.asserted) {
          ++asserted;
          failed += c.passed ? 0 : 1;
        }
      }
    }
    nlohmann::json j = {{"version", kReportVersion},
                        {"command", command},
                        {"parameters", parameters},
                        {"seed", seed},
                        {"passed", passed()},
                        {"summary", {{"checks", total}, {"asserted", asserted}, {"failed", failed}}},
                        {"suites", suites}};
    if (!artifacts.empty()) {
      j["artifacts"] = artifacts;
    }
    if (wall_ms) {
      j["wall_ms"] = *wall_ms;
    }
    return j;
  }
};

namespace detail {

inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace detail

/// Markdown summary derived from a report JSON: one row per relation, then the failing checks.
inline std::string report_markdown(const nlohmann::json& report) {
  struct Row {
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::size_t asserted = 0;
    std::size_t asserted_failed = 0;
    double max_residual = -1.0;
    std::vector<std::string> suites;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  std::vector<std::string> failures;
  for (const auto& s : report.at("suites")) {
    const std::string suite = s.at("name").get<std::string>();
    for (const auto& c : s.at("checks")) {
      const std::string rel = c.at("relation").get<std::string>();
      if (!rows.count(rel)) {
        order.push_back(rel);
      }
      Row& row = rows[rel];
      ++row.checks;
      const bool ok = c.at("passed").get<bool>();
      const bool asserted = c.at("asserted").get<bool>();
      row.passed += ok ? 1 : 0;
      if (asserted) {
        ++row.asserted;
        if (!ok) {
          ++row.asserted_failed;
          failures.push_back("- `" + suite + "` / " + c.at("name").get<std::string>() +
                             (c.contains("detail") ? ": " + c.at("detail").get<std::string>() : std::string()));
        }
      }
      if (c.at("kind") == "residual") {
        row.max_residual = std::max(row.max_residual, c.at("value").get<double>());
      }
      if (std::find(row.suites.begin(), row.suites.end(), suite) == row.suites.end()) {
        row.suites.push_back(suite);
      }
    }
  }

  std::ostringstream out;
  out << "# parabraid report\n\n";
  out << "Command: `" << report.at("command").get<std::string>() << "`, parameters `" << report.at("parameters").dump()
      << "`, seed " << report.at("seed").get<std::uint64_t>() << ".\n\n";
  out << "Overall: **" << (report.at("passed").get<bool>() ? "PASS" : "FAIL") << "** ("
      << report.at("summary").at("asserted").get<std::size_t>() - report.at("summary").at("failed").get<std::size_t>()
      << "/" << report.at("summary").at("asserted").get<std::size_t>() << " asserted checks passed).\n\n";
  out << "| Relation | Suites | Checks | Passed | Max residual | Status |\n";
  out << "|---|---|---:|---:|---:|---|\n";
  for (const auto& rel : order) {
    const Row& row = rows[rel];
    std::string suites;
    if (row.suites.size() <= 3) {
      for (std::size_t i = 0; i < row.suites.size(); ++i) {
        suites += (i ? ", " : "") + row.suites[i];
      }
    } else {
      suites = row.suites.front() + " .. " + row.suites.back() + " (" + std::to_string(row.suites.size()) + ")";
    }
    const char* status = row.asserted == 0 ? "recorded" : (row.asserted_failed == 0 ? "PASS" : "FAIL");
    out << "| " << rel << " | " << suites << " | " << row.checks << " | " << row.passed << " | "
        << (row.max_residual < 0 ? std::string("-") : detail::format_value(row.max_residual)) << " | " << status
        << " |\n";
  }
  if (!failures.empty()) {
    out << "\n## Failing asserted checks\n\n";
    for (const auto& f : failures) {
      out << f << "\n";
    }
  }
  return out.str();
}

}  // namespace parabraid
