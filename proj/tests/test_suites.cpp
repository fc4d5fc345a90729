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

#include <algorithm>
#include <string>

#include "doctest.h"
#include "qifh/error.hpp"
#include "qifh/suites.hpp"
#include "qifh/term.hpp"

using namespace qifh;

namespace {

SuiteConfig small(const std::string& name) {
  SuiteConfig cfg = default_suite_config(name);
  cfg.max_nodes = 3;
  cfg.max_points = name == "meager-oracle" ? 3 : 2;
  cfg.max_q = 2;
  cfg.samples = 2000;
  cfg.family_budget = 2000;
  cfg.hk_max_nodes = 5;
  return cfg;
}

}  // namespace

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  for (const char* want : {"qo-axioms", "hom-oracle", "inclusion", "shift-law", "wadge-closure", "preservation", "reduct",
                           "hk", "meager-oracle", "fmap", "member-oracle", "catq-laws"}) {
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  }
  CHECK(default_suite_config("meager-oracle").max_points == 4);
  CHECK(default_suite_config("hom-oracle").max_q == 2);
  CHECK(default_suite_config("inclusion").max_q == 3);
}

TEST_CASE("errors") {
  SuiteConfig cfg;
  cfg.suite = "no-such-suite";
  try {
    (void)run_suite(cfg);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownSuite);
  }
  cfg = default_suite_config("qo-axioms");
  cfg.max_nodes = 0;
  try {
    (void)run_suite(cfg);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("every suite passes at small bounds") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteConfig cfg = small(name);
    const SuiteReport r = run_suite(cfg);
    CHECK(r.suite == name);
    CHECK(r.passed());
    CHECK(r.violations == 0);
    CHECK(r.checked > 0);
    CHECK(r.counterexamples.empty());
    const Json j = r.to_json(cfg);
    CHECK(j["result"] == "PASS");
    CHECK(j["checked"] == r.checked);
    const std::string text = r.to_text(cfg);
    CHECK(text.find("suite: " + name) != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  for (const char* name : {"qo-axioms", "reduct", "hk"}) {
    SuiteConfig cfg = small(name);
    cfg.seed = 42;
    CHECK(run_suite(cfg).to_text(cfg) == run_suite(cfg).to_text(cfg));
  }
}

TEST_CASE("report bookkeeping") {
  SuiteReport r;
  r.count("x");
  r.count("x", 4);
  r.count("y", 2);
  REQUIRE(r.counters.size() == 2);
  CHECK(r.counters[0] == std::pair<std::string, std::uint64_t>{"x", 5});
  for (int i = 0; i < 15; ++i) r.violation("bad " + std::to_string(i));
  CHECK(r.violations == 15);
  CHECK(r.counterexamples.size() == 10);
  CHECK_FALSE(r.passed());
}

TEST_CASE("tree oracle") {
  TreeOracle o(Quasiorder::antichain(2));
  CHECK(o.leq(parse_term("0"), parse_term("Fq[1](0)")));
  CHECK_FALSE(o.leq(parse_term("Fq[0](1)"), parse_term("Fq[1](0)")));
  CHECK(o.leq(parse_term("s[1](0)"), parse_term("0")));
}
