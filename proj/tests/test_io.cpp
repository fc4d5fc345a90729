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

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "qifh/error.hpp"
#include "qifh/io.hpp"

using namespace qifh;

namespace {

Json J(const char* s) { return Json::parse(s); }

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{0};
}

const FinSpace kS = FinSpace::sierpinski();

}  // namespace

TEST_CASE("quasiorder documents") {
  const auto q = qo_from_json(J(R"({"size": 3, "le": [[0, 1], [1, 2]]})"));
  CHECK(q == Quasiorder::chain(3));
  CHECK(qo_from_json(qo_to_json(q)) == q);
  const auto named = qo_from_json(J(R"({"size": 2, "le": [], "names": ["red", "blue"]})"));
  CHECK(named.name(1) == "blue");
  CHECK(qo_to_json(named)["names"]["1"] == "blue");
  CHECK(qo_from_json(J(R"({"size": 2, "le": [], "names": {"0": "x", "1": "y"}})")).name(0) == "x");
  CHECK(code_of([] { (void)qo_from_json(J(R"({"le": []})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { (void)qo_from_json(J(R"({"size": 2, "le": [[0, 5]]})")); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { (void)qo_from_json(J(R"({"size": "two", "le": []})")); }) == ErrorCode::kParse);
}

TEST_CASE("space documents") {
  const auto x = space_from_json(J(R"({"points": ["a", "b", "c"], "le": [["a", "b"], ["c", "b"]]})"));
  CHECK(x.size() == 3);
  CHECK(x.leq(0, 1));
  CHECK(x.leq(2, 1));
  CHECK_FALSE(x.leq(0, 2));
  CHECK(space_from_json(space_to_json(x)) == x);
  CHECK(space_to_json(x)["points"][2] == "c");
  CHECK(space_from_spec(J(R"("S")")) == kS);
  CHECK(space_from_spec(J(R"("D3")")) == FinSpace::discrete(3));
  CHECK(space_from_spec(J(R"("C2")")) == FinSpace::chain(2));
  CHECK(code_of([] { (void)space_from_spec(J(R"("Q7")")); }) != ErrorCode{0});
  CHECK(code_of([] { (void)space_from_json(J(R"({"points": ["a", "b"], "le": [["a", "b"], ["b", "a"]]})")); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { (void)space_from_json(J(R"({"points": ["a"], "le": [["a", "z"]]})")); }) != ErrorCode{0});
  CHECK(code_of([] { (void)space_from_json(J(R"({"points": ["a", "a"], "le": []})")); }) != ErrorCode{0});
}

TEST_CASE("sets, partitions and maps") {
  CHECK(set_from_json(kS, J(R"(["b"])")) == 0b10);
  CHECK(set_to_json(kS, 0b11) == J(R"(["a", "b"])"));
  CHECK(code_of([] { (void)set_from_json(kS, J(R"(["z"])")); }) != ErrorCode{0});

  const auto q = Quasiorder::antichain(2);
  const auto a = partition_from_json(J(R"({"values": {"a": 0, "b": 1}})"), kS, q);
  CHECK(a.values == std::vector<std::uint32_t>{0, 1});
  CHECK(partition_from_json(partition_to_json(a), kS, q) == a);
  CHECK(partition_from_json(J(R"({"values": [1, 0]})"), kS, q).values == std::vector<std::uint32_t>{1, 0});
  auto named = Quasiorder::antichain(2);
  named.set_names({"lo", "hi"});
  CHECK(partition_from_json(J(R"({"values": {"a": "hi", "b": "lo"}})"), kS, named).values ==
        std::vector<std::uint32_t>{1, 0});
  // Missing points, unknown labels and mismatched spaces are rejected.
  CHECK(code_of([&] { (void)partition_from_json(J(R"({"values": {"a": 0}})"), kS, q); }) != ErrorCode{0});
  CHECK(code_of([&] { (void)partition_from_json(J(R"({"values": {"a": 0, "b": 5}})"), kS, q); }) != ErrorCode{0});
  CHECK(code_of([&] {
          (void)partition_from_json(J(R"({"space": "D2", "values": {"0": 0, "1": 1}})"), kS, q);
        }) != ErrorCode{0});
  CHECK(values_to_json(kS, {kNoLabel, 1}) == J(R"({"b": 1})"));

  const ContMap pi(FinSpace::product(kS, FinSpace::discrete(2)), kS, {0, 0, 1, 1});
  const ContMap back = map_from_json(map_to_json(pi));
  CHECK(back.values() == pi.values());
  CHECK(back.source() == pi.source());
  CHECK(code_of([] {
          (void)map_from_json(J(R"({"source": "S", "target": "S", "values": {"a": "b", "b": "a"}})"));
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("base documents") {
  const Base b = base_from_json(J(R"("borel")"), kS);
  CHECK(b.level(Ordinal{}).members() == std::vector<PointSet>{0, 0b10, 0b11});
  const Base round = base_from_json(base_to_json(b), kS);
  CHECK(round.steps().size() == b.steps().size());
  CHECK(round.level(Ordinal{}) == b.level(Ordinal{}));
  const Base custom = base_from_json(
      J(R"({"steps": [{"threshold": "0", "level": "opens"}, {"threshold": "w", "level": "all"}]})"), kS);
  CHECK(custom.level(parse_ordinal("5")) == custom.level(Ordinal{}));
  CHECK(custom.level(parse_ordinal("w")).is_power_set());
  const Base explicit_sets = base_from_json(
      J(R"({"steps": [{"threshold": "0", "level": [[], ["a", "b"]]}, {"threshold": "1", "level": "all"}]})"), kS);
  CHECK(explicit_sets.level(Ordinal{}).count() == 2);
  CHECK(code_of([] {
          (void)base_from_json(J(R"({"steps": [{"threshold": "0", "level": "opens"}]})"), kS);
        }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { (void)base_from_json(J(R"({"steps": [{"threshold": "w^", "level": "all"}]})"), kS); }) ==
        ErrorCode::kParse);
}

TEST_CASE("family documents") {
  const Base b = base_borel(kS);
  const UFamily f = family_from_json(J(R"J({"term": "Fq[0](1)", "sets": {"0": ["b"]}})J"), b);
  CHECK(f.carrier == 0b11);
  CHECK(f.sets == std::vector<PointSet>{0b11, 0b10});
  const Json j = family_to_json(f, kS);
  CHECK(j["sets"][""] == J(R"(["a", "b"])"));
  CHECK_FALSE(j.contains("children"));
  const UFamily g = family_from_json(j, b);
  CHECK(g.sets == f.sets);
  CHECK(g.term == f.term);

  const UFamily nested = family_from_json(
      J(R"J({"term": "Fo[1](Fq[0](1),1)", "sets": {"0": ["b"]},
             "children": {"e": {"term": "s[1](Fq[0](1))", "sets": {"0": ["a"]}}}})J"),
      b);
  const Json nj = family_to_json(nested, kS);
  CHECK(nj["children"][""]["carrier"] == J(R"(["a"])"));
  CHECK(family_from_json(nj, b).nested.at(0).sets == nested.nested.at(0).sets);

  const Evaluation ev{{0, 1}, std::nullopt};
  CHECK(evaluation_to_json(ev, kS) == J(R"({"values": {"a": 0, "b": 1}})"));
  const Evaluation un{{kNoLabel, kNoLabel}, Undetermined{1, {0, 1}}};
  CHECK(evaluation_to_json(un, kS) == J(R"({"undetermined": {"point": "b", "labels": [0, 1]}})"));
  CHECK(code_of([&] { (void)family_from_json(J(R"({"sets": {}})"), b); }) == ErrorCode::kParse);
  CHECK(code_of([&] { (void)family_from_json(J(R"J({"term": "Fq[0](1)", "sets": {"7": []}})J"), b); }) != ErrorCode{0});
}

TEST_CASE("trees and DOT output") {
  const auto t = qtree_from_json(J(R"({"nodes": ["", "0", "1", "10"], "labels": {"": 0, "0": 1, "1": 1, "10": 0}})"));
  CHECK(t.size() == 4);
  CHECK(t.label(*t.find({1, 0})) == 0);
  CHECK(qtree_to_json(t) == J(R"({"nodes": ["", "0", "1", "10"], "labels": {"": 0, "0": 1, "1": 1, "10": 0}})"));
  // Addresses must be prefix-closed.
  CHECK(code_of([] { (void)qtree_from_json(J(R"({"nodes": ["", "10"], "labels": {"": 0, "10": 0}})")); }) !=
        ErrorCode{0});
  const std::string dot = qtree_dot(t);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(term_tree_dot(parse_term("Fo[1](0,1)")).find("s[1](0)") != std::string::npos);
  const std::string syn = term_syntax_dot(parse_term("Fq[0](1,s[2](0))"));
  CHECK(syn.find("Fq[0]") != std::string::npos);
  CHECK(syn.find("s[2]") != std::string::npos);
  CHECK(term_tree_to_json(parse_term("Fo[1](0,1)")) == J(R"J({"nodes": ["", "0"], "labels": {"": "s[1](0)", "0": "1"}})J"));
}

TEST_CASE("files") {
  const std::string path = "qifh_test_io.json";
  write_text_file(path, R"({"size": 2, "le": [[0, 1]]})");
  CHECK(qo_from_json(read_json_file(path)) == Quasiorder::chain(2));
  write_text_file(path, "{not json");
  CHECK(code_of([&] { (void)read_json_file(path); }) == ErrorCode::kParse);
  std::remove(path.c_str());
  CHECK(code_of([] { (void)read_json_file("/nonexistent/qifh.json"); }) == ErrorCode::kIo);
}
