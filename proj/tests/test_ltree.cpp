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

#include <cstdint>
#include <functional>
#include <vector>

#include "doctest.h"
#include "qifh/error.hpp"
#include "qifh/ltree.hpp"

using namespace qifh;

namespace {

using QTree = LabeledTree<std::uint32_t>;

// Parent vectors of every rooted ordered tree with n nodes in preorder:
// node i > 0 attaches to a node on the current rightmost path.
void shapes_rec(std::vector<std::ptrdiff_t>& par, std::size_t n, std::vector<std::vector<std::ptrdiff_t>>& out) {
  if (par.size() == n) {
    out.push_back(par);
    return;
  }
  // Rightmost path of the preorder tree built so far.
  std::vector<std::size_t> path;
  for (std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(par.size()) - 1; cur >= 0; cur = par[static_cast<std::size_t>(cur)]) {
    path.push_back(static_cast<std::size_t>(cur));
  }
  for (std::size_t p : path) {
    par.push_back(static_cast<std::ptrdiff_t>(p));
    shapes_rec(par, n, out);
    par.pop_back();
  }
}

std::vector<QTree> all_trees(std::size_t max_nodes, std::uint32_t labels) {
  std::vector<QTree> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<std::vector<std::ptrdiff_t>> shapes;
    std::vector<std::ptrdiff_t> par{-1};
    shapes_rec(par, n, shapes);
    for (const auto& sh : shapes) {
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < n; ++i) combos *= labels;
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::uint64_t c = code;
        std::vector<std::uint32_t> lab(n);
        for (std::size_t i = 0; i < n; ++i) {
          lab[i] = static_cast<std::uint32_t>(c % labels);
          c /= labels;
        }
        QTree t(lab[0]);
        for (std::size_t i = 1; i < n; ++i) t.add_child(static_cast<std::size_t>(sh[i]), lab[i]);
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

// Brute force: try every node map and check monotonicity along edges
// (prefix order is generated by the edges) and labels.
template <class Leq>
bool brute_hom(const QTree& t, const QTree& v, Leq leq) {
  const std::size_t n = t.size();
  const std::size_t m = v.size();
  std::vector<std::size_t> phi(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!leq(t.label(i), v.label(phi[i]))) ok = false;
      if (ok && i > 0 && !v.is_ancestor_or_self(phi[static_cast<std::size_t>(t.parent(i))], phi[i])) ok = false;
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < n && ++phi[k] == m) phi[k++] = 0;
    if (k == n) return false;
  }
}

QTree path(std::initializer_list<std::uint32_t> labels) {
  auto it = labels.begin();
  QTree t(*it++);
  std::size_t cur = 0;
  for (; it != labels.end(); ++it) cur = t.add_child(cur, *it);
  return t;
}

}  // namespace

TEST_CASE("addresses") {
  CHECK(address_to_string({}) == "");
  CHECK(address_to_string({1, 0, 2}) == "102");
  CHECK(address_to_string({12, 0}) == "12.0");
  CHECK(parse_address("") == Address{});
  CHECK(parse_address("e") == Address{});
  CHECK(parse_address("102") == Address{1, 0, 2});
  CHECK(parse_address("12.0") == Address{12, 0});
  CHECK_THROWS_AS(parse_address("1a"), Error);
  CHECK_THROWS_AS(parse_address("1..2"), Error);
  CHECK(is_prefix({}, {0}));
  CHECK(is_prefix({1}, {1, 3}));
  CHECK_FALSE(is_prefix({1}, {0, 1}));
  CHECK_FALSE(is_prefix({1, 3}, {1}));
}

TEST_CASE("tree structure") {
  QTree t(5);
  const auto a = t.add_child(0, 1);
  const auto b = t.add_child(0, 2);
  const auto c = t.add_child(a, 3);
  CHECK(t.size() == 4);
  CHECK(t.address(c) == Address{0, 0});
  CHECK(t.address(b) == Address{1});
  CHECK(t.find({0, 0}) == std::optional<std::size_t>{c});
  CHECK_FALSE(t.find({2}).has_value());
  CHECK(t.is_ancestor_or_self(0, c));
  CHECK(t.is_ancestor_or_self(c, c));
  CHECK_FALSE(t.is_ancestor_or_self(b, c));
  CHECK(t.is_leaf(b));
  QTree g(9);
  g.graft(0, t);
  CHECK(g.size() == 5);
  CHECK(g.label(*g.find({0, 0, 0})) == 3);
}

TEST_CASE("hom examples") {
  auto eq = [](std::uint32_t a, std::uint32_t b) { return a == b; };
  // A path 0-1 embeds into 0-1-0 but not into 1-0.
  CHECK(hom_leq(path({0, 1}), path({0, 1, 0}), eq));
  CHECK_FALSE(hom_leq(path({0, 1}), path({1, 0}), eq));
  // Both children of a root may map to the same node.
  QTree fork(0);
  fork.add_child(0, 1);
  fork.add_child(0, 1);
  CHECK(hom_leq(fork, path({0, 1}), eq));
  // Labels along a chain may collapse onto one node.
  CHECK(hom_leq(path({1, 1, 1}), path({1}), eq));
  CHECK_FALSE(hom_leq(path({1, 0}), path({0, 1}), eq));
  // The root can map below the target root.
  CHECK(hom_leq(path({1}), path({0, 1}), eq));
}

TEST_CASE("forest examples") {
  auto eq = [](std::uint32_t a, std::uint32_t b) { return a == b; };
  LabeledForest<std::uint32_t> f{path({0}), path({1, 0})};
  LabeledForest<std::uint32_t> g{path({1, 0, 1})};
  LabeledForest<std::uint32_t> h{path({0, 1})};
  CHECK(forest_hom_leq(f, g, eq));
  CHECK_FALSE(forest_hom_leq(f, h, eq));
  CHECK(forest_hom_leq(h, g, eq));
  CHECK_THROWS_AS(forest_hom_leq(LabeledForest<std::uint32_t>{}, g, eq), Error);
  CHECK_THROWS_AS(forest_hom_leq(f, LabeledForest<std::uint32_t>{}, eq), Error);
}

TEST_CASE("hom_leq agrees with brute force on all trees with <= 4 nodes") {
  const auto trees = all_trees(4, 2);
  CHECK(trees.size() == 2 + 4 + 2 * 8 + 5 * 16);
  const std::vector<std::function<bool(std::uint32_t, std::uint32_t)>> orders = {
      [](std::uint32_t a, std::uint32_t b) { return a == b; },  // antichain
      [](std::uint32_t a, std::uint32_t b) { return a <= b; },  // chain
  };
  for (const auto& leq : orders) {
    std::vector<std::vector<char>> rel(trees.size(), std::vector<char>(trees.size()));
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = 0; j < trees.size(); ++j) {
        const bool got = hom_leq(trees[i], trees[j], leq);
        REQUIRE(got == brute_hom(trees[i], trees[j], leq));
        rel[i][j] = got ? 1 : 0;
      }
      REQUIRE(rel[i][i]);
    }
    // Transitivity, exhaustive.
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = 0; j < trees.size(); ++j) {
        if (!rel[i][j]) continue;
        for (std::size_t k = 0; k < trees.size(); ++k) {
          if (rel[j][k]) REQUIRE(rel[i][k]);
        }
      }
    }
  }
}
