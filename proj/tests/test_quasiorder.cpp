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
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "qifh/error.hpp"
#include "qifh/quasiorder.hpp"

using namespace qifh;

namespace {

// Every quasiorder on k points as a relation matrix (brute force over all
// reflexive relations, keeping the transitive ones).
std::vector<std::vector<bool>> all_quasiorders(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    std::vector<bool> r(k * k, false);
    for (std::size_t i = 0; i < k; ++i) r[i * k + i] = true;
    for (std::size_t b = 0; b < off.size(); ++b) {
      if ((mask >> b) & 1U) r[off[b].first * k + off[b].second] = true;
    }
    bool trans = true;
    for (std::size_t a = 0; a < k && trans; ++a) {
      for (std::size_t b = 0; b < k && trans; ++b) {
        for (std::size_t c = 0; c < k && trans; ++c) {
          if (r[a * k + b] && r[b * k + c] && !r[a * k + c]) trans = false;
        }
      }
    }
    if (trans) out.push_back(r);
  }
  return out;
}

// All permutations g with i <= j <=> g(i) <= g(j).
std::set<Permutation> brute_automorphisms(const std::vector<bool>& r, std::size_t k) {
  std::set<Permutation> out;
  Permutation g(k);
  std::iota(g.begin(), g.end(), 0U);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (r[i * k + j] != r[g[i] * k + g[j]]) ok = false;
      }
    }
    if (ok) out.insert(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

}  // namespace

TEST_CASE("constructors") {
  const auto a = Quasiorder::antichain(3);
  CHECK(a.size() == 3);
  CHECK(qo_is_antichain(a));
  CHECK(a.leq(1, 1));
  CHECK_FALSE(a.leq(0, 1));

  const auto c = Quasiorder::chain(3);
  CHECK(c.leq(0, 2));
  CHECK_FALSE(c.leq(2, 0));
  CHECK_FALSE(qo_is_antichain(c));

  // from_pairs closes reflexively and transitively.
  const auto q = Quasiorder::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(q == c);

  // Equivalent elements are allowed in a quasiorder.
  const auto e = Quasiorder::from_pairs(2, {{0, 1}, {1, 0}});
  CHECK(e.leq(1, 0));
  CHECK_FALSE(qo_is_antichain(e));

  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(3));
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(Quasiorder::from_matrix(2, {true, false, false}), Error);
  // Not reflexive.
  CHECK_THROWS_AS(Quasiorder::from_matrix(2, {false, false, false, true}), Error);
  // Not transitive.
  CHECK_THROWS_AS(Quasiorder::from_matrix(3, {true, true, false, false, true, true, false, false, true}), Error);
  CHECK_THROWS_AS(Quasiorder::from_pairs(2, {{0, 2}}), Error);
  const auto ok = Quasiorder::from_matrix(2, {true, true, false, true});
  CHECK(ok == Quasiorder::chain(2));
}

TEST_CASE("names") {
  auto q = Quasiorder::antichain(2);
  q.set_names({"red", "blue"});
  CHECK(q.name(1) == "blue");
  CHECK_THROWS_AS(q.set_names({"x"}), Error);
}

TEST_CASE("automorphism examples") {
  CHECK(qo_automorphisms(Quasiorder::antichain(3)).size() == 6);
  CHECK(qo_automorphisms(Quasiorder::chain(3)).size() == 1);
  // 0 below 1 and 2: swapping 1 and 2 is the only nontrivial automorphism.
  const auto v = Quasiorder::from_pairs(3, {{0, 1}, {0, 2}});
  const auto g = qo_automorphisms(v);
  CHECK(g.size() == 2);
  CHECK(is_automorphism(v, {0, 2, 1}));
  CHECK_FALSE(is_automorphism(v, {1, 0, 2}));
  CHECK_FALSE(is_automorphism(v, {0, 0, 1}));
  CHECK(compose(Permutation{1, 2, 0}, Permutation{1, 2, 0}) == Permutation{2, 0, 1});
  CHECK(inverse(Permutation{1, 2, 0}) == Permutation{2, 0, 1});
}

TEST_CASE("automorphism groups match brute force for every quasiorder on <= 4 points") {
  const std::size_t expected_counts[] = {1, 1, 4, 29, 355};
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto rels = all_quasiorders(k);
    CHECK(rels.size() == expected_counts[k]);
    for (const auto& r : rels) {
      const auto q = Quasiorder::from_matrix(k, r);
      const auto got = qo_automorphisms(q);
      const std::set<Permutation> got_set(got.begin(), got.end());
      REQUIRE(got_set.size() == got.size());
      REQUIRE(got_set == brute_automorphisms(r, k));
      REQUIRE(qo_is_antichain(q) == (std::count(r.begin(), r.end(), true) == static_cast<long>(k)));
      // Closed under composition and inverse.
      for (const auto& g : got) {
        REQUIRE(got_set.count(inverse(g)) == 1);
        for (const auto& h : got) REQUIRE(got_set.count(compose(g, h)) == 1);
      }
    }
  }
}
