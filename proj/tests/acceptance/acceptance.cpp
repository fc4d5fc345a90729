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

// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "qifh/hierarchy.hpp"
#include "qifh/quasiorder.hpp"
#include "qifh/space.hpp"
#include "qifh/suites.hpp"
#include "qifh/term.hpp"

namespace {

using namespace qifh;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s %s (%s)\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::uint64_t counter(const SuiteReport& r, const std::string& key) {
  for (const auto& [k, v] : r.counters)
    if (k == key) return v;
  return 0;
}

struct Timed {
  SuiteReport report;
  double seconds;
};

Timed run(const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  SuiteReport r = run_suite(cfg);
  return {std::move(r), std::chrono::duration<double>(Clock::now() - t0).count()};
}

std::string basic(const Timed& t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "checked=%llu skipped=%llu violations=%llu %.1fs",
                static_cast<unsigned long long>(t.report.checked),
                static_cast<unsigned long long>(t.report.skipped),
                static_cast<unsigned long long>(t.report.violations), t.seconds);
  return buf;
}

void show_counterexamples(const SuiteReport& r) {
  for (const auto& c : r.counterexamples) std::printf("    counterexample: %s\n", c.c_str());
}

}  // namespace

int main() {
  // 1. term order against tree homomorphism, Q = antichain(2).
  {
    const Timed t = run(default_suite_config("hom-oracle"));
    const std::uint64_t pairs = 822ull * 822ull;
    const bool ok = t.report.passed() && t.report.checked >= pairs && t.seconds < 120.0;
    report(1, ok, "term order equals tree homomorphism order", basic(t));
    show_counterexamples(t.report);
  }
  // 2. quasiorder axioms with >= 1e5 sampled triples.
  {
    SuiteConfig cfg = default_suite_config("qo-axioms");
    const Timed t = run(cfg);
    const std::uint64_t sampled = counter(t.report, "sampled-triples");
    const bool ok = t.report.passed() && sampled >= 100000;
    report(2, ok, "term order is reflexive and transitive",
           basic(t) + " sampled-triples=" + std::to_string(sampled));
    show_counterexamples(t.report);
  }
  // 3. inclusion of level sets, Q in {2, 3}.
  {
    SuiteConfig cfg = default_suite_config("inclusion");
    cfg.max_q = 3;
    cfg.max_points = 3;
    cfg.max_nodes = 4;
    const Timed t = run(cfg);
    const bool ok = t.report.passed() && t.report.checked > 0 && t.seconds < 600.0;
    report(3, ok, "u <= v implies level inclusion", basic(t));
    show_counterexamples(t.report);
  }
  // 4. preservation under continuous open surjections.
  Timed preservation = run(default_suite_config("preservation"));
  report(4, preservation.report.passed() && counter(preservation.report, "maps") > 0,
         "membership preserved by open surjections",
         basic(preservation) + " maps=" + std::to_string(counter(preservation.report, "maps")));
  show_counterexamples(preservation.report);
  // 5. every partition of a small poset is witnessed.
  Timed hk = run(default_suite_config("hk"));
  {
    const std::uint64_t witnessed = counter(hk.report, "witnessed");
    const bool ok = hk.report.passed() && witnessed == hk.report.checked && witnessed > 0;
    report(5, ok, "every 2- and 3-partition has a witness term",
           basic(hk) + " witnessed=" + std::to_string(witnessed));
    show_counterexamples(hk.report);
  }
  // 6. member against member_enum, plus enumeration checks of the witnesses.
  {
    const Timed t = run(default_suite_config("member-oracle"));
    const std::uint64_t confirmed = counter(hk.report, "witness-confirmed-by-enumeration");
    const std::uint64_t over = counter(hk.report, "witness-enumeration-over-budget");
    const bool ok = t.report.passed() && hk.report.passed() && t.report.checked > 0;
    report(6, ok, "member agrees with family enumeration",
           basic(t) + " hk-confirmed=" + std::to_string(confirmed) +
               " hk-over-budget=" + std::to_string(over));
    show_counterexamples(t.report);
  }
  // 7. reducts evaluate like the family they came from.
  {
    const Timed t = run(default_suite_config("reduct"));
    const std::uint64_t agree = counter(t.report, "determining-reducts-agree");
    const bool ok = t.report.passed() && agree >= 1000;
    report(7, ok, "reducts of determining families agree",
           basic(t) + " agree=" + std::to_string(agree) +
               " determining=" + std::to_string(counter(t.report, "families-determining")));
    show_counterexamples(t.report);
  }
  // 8. category-quantifier laws on the preservation maps.
  {
    const Timed t = run(default_suite_config("catq-laws"));
    report(8, t.report.passed() && t.report.checked > 0, "category quantifier laws", basic(t));
    show_counterexamples(t.report);
  }
  // 9. f-map spot values and monotonicity.
  {
    const Timed t = run(default_suite_config("fmap"));
    report(9, t.report.passed() && counter(t.report, "spot-values") > 0, "f-map values and monotonicity",
           basic(t));
    show_counterexamples(t.report);
  }
  // 10. dual classes on the Sierpinski space separate exactly one partition each.
  {
    const FinSpace s = FinSpace::sierpinski();
    const Quasiorder q = Quasiorder::antichain(2);
    const Term left_t = parse_term("Fq[0](1)");
    const Term right_t = parse_term("Fq[1](0)");
    std::set<std::vector<std::uint32_t>> left;
    std::set<std::vector<std::uint32_t>> right;
    for (const auto& p : level_set(s, q, left_t)) left.insert(p.values);
    for (const auto& p : level_set(s, q, right_t)) right.insert(p.values);
    std::vector<std::vector<std::uint32_t>> only_left;
    std::vector<std::vector<std::uint32_t>> only_right;
    for (const auto& v : left)
      if (!right.count(v)) only_left.push_back(v);
    for (const auto& v : right)
      if (!left.count(v)) only_right.push_back(v);
    const QPartition a{s, q, {0, 1}};
    const Base base = base_borel(s);
    const bool in_left = member(a, left_t, base);
    const bool in_right = member(a, right_t, base);
    const bool ok = in_left && !in_right && only_left.size() == 1 && only_right.size() == 1 &&
                    only_left[0] == std::vector<std::uint32_t>{0, 1} &&
                    only_right[0] == std::vector<std::uint32_t>{1, 0};
    report(10, ok, "non-collapse of Fq[0](1) and Fq[1](0) on S",
           "left-only=" + std::to_string(only_left.size()) + " right-only=" + std::to_string(only_right.size()) +
               " a->0,b->1 in left=" + (in_left ? "yes" : "no") + " in right=" + (in_right ? "yes" : "no"));
  }
  // 11. meager sets by the singleton criterion vs brute force.
  {
    SuiteConfig cfg = default_suite_config("meager-oracle");
    cfg.max_points = 4;
    const Timed t = run(cfg);
    report(11, t.report.passed() && t.report.checked > 0, "meager criterion matches brute force", basic(t));
    show_counterexamples(t.report);
  }
  std::printf("acceptance: %s (%d failed)\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
