/*
 * Copyright 2026 The qifh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qifh/io.hpp"
#include "qifh/quasiorder.hpp"
#include "qifh/term.hpp"

namespace qifh {

struct SuiteConfig {
  std::string suite;
  std::size_t max_nodes = 4;
  /// Subscripts range over 0..max_subscript.
  std::uint64_t max_subscript = 1;
  std::size_t max_points = 3;
  std::size_t max_q = 3;
  std::size_t max_children = 2;
  std::uint64_t seed = 0;
  /// Sampled triples for the transitivity check.
  std::uint64_t samples = 100000;
  /// Largest family enumeration attempted for one (space, term).
  std::uint64_t family_budget = 20000;
  /// Node bound for HK witness terms.
  std::size_t hk_max_nodes = 6;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  /// Named counters, in insertion order.
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  /// The first few violations, verbatim.
  std::vector<std::string> counterexamples;
  /// Extra per-instance output (HK witnesses, for instance).
  std::vector<std::string> details;

  bool passed() const noexcept { return violations == 0; }
  void count(const std::string& key, std::uint64_t by = 1);
  void violation(const std::string& text);
  std::string to_text(const SuiteConfig& cfg) const;
  Json to_json(const SuiteConfig& cfg) const;
};

/// Bounds used when a caller does not override them: four points for the
/// meager oracle, two labels for the term-order suites.
SuiteConfig default_suite_config(const std::string& suite);

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Throws kUnknownSuite for names outside suite_names() and
/// kInvalidArgument for empty bounds.
SuiteReport run_suite(const SuiteConfig& cfg);

/// u <| v decided through T(u) <=_h T(v), labels compared recursively
/// (constants by Q, s-terms by the s-clauses). Independent of TermOrder.
class TreeOracle {
 public:
  explicit TreeOracle(Quasiorder q) : q_(std::move(q)) {}
  bool leq(const Term& u, const Term& v);

 private:
  bool label_leq(const Term& a, const Term& b);

  Quasiorder q_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace qifh
