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
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "doctest.h"
#include "qifh/enumerate.hpp"
#include "qifh/error.hpp"
#include "qifh/term.hpp"

using namespace qifh;

namespace {

Term t(const char* s) { return parse_term(s); }

// Rank read off the concrete syntax: every constructor opens one level of
// parentheses, constants open none. Bracketed subscripts are skipped.
std::size_t paren_depth(const std::string& s) {
  std::size_t depth = 0;
  std::size_t best = 0;
  int bracket = 0;
  for (char c : s) {
    if (c == '[') ++bracket;
    else if (c == ']') --bracket;
    else if (bracket == 0 && c == '(') best = std::max(best, ++depth);
    else if (bracket == 0 && c == ')') --depth;
  }
  return best;
}

bool singleton(const Term& u) {
  Term cur = u;
  while (cur.kind() == TermKind::kShift) cur = cur.body();
  return cur.kind() == TermKind::kConst;
}

Term strip(const Term& u) {
  Term cur = u;
  while (cur.kind() == TermKind::kShift) cur = cur.body();
  return cur;
}

// T(u) built from the definition, as parent/label arrays in preorder.
struct Tree {
  std::vector<std::ptrdiff_t> parent;
  std::vector<Term> label;
  std::vector<std::string> addr;
};

void build(const Term& u, std::ptrdiff_t par, const std::string& addr, Tree& out) {
  const std::size_t me = out.label.size();
  out.parent.push_back(par);
  out.addr.push_back(addr);
  auto kids = u.children();
  switch (u.kind()) {
    case TermKind::kConst:
    case TermKind::kShift:
      out.label.push_back(u);
      return;
    case TermKind::kFQ:
      out.label.push_back(Term::constant(u.label()));
      for (std::size_t i = 0; i < kids.size(); ++i) {
        build(kids[i], static_cast<std::ptrdiff_t>(me), addr + std::to_string(i), out);
      }
      return;
    case TermKind::kFOrd:
      out.label.push_back(Term::shift(u.subscript(), kids[0]));
      for (std::size_t i = 1; i < kids.size(); ++i) {
        build(kids[i], static_cast<std::ptrdiff_t>(me), addr + std::to_string(i - 1), out);
      }
      return;
  }
}

Tree tree_of(const Term& u) {
  Tree tr;
  build(u, -1, "", tr);
  return tr;
}

bool ancestor_or_self(const Tree& tr, std::size_t a, std::size_t b) {
  for (std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(b); cur >= 0; cur = tr.parent[static_cast<std::size_t>(cur)]) {
    if (static_cast<std::size_t>(cur) == a) return true;
  }
  return false;
}

// Brute-force oracle: u <| v iff some monotone node map of T(u) into T(v)
// respects labels, where constants compare in Q and s-labels compare by the
// s-clauses (body vs. term depending on the subscripts).
class BruteOracle {
 public:
  explicit BruteOracle(Quasiorder q) : q_(std::move(q)) {}

  bool leq(const Term& u, const Term& v) {
    const std::uint64_t key = (std::uint64_t{u.id()} << 32) | v.id();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r;
    const bool ul = u.kind() == TermKind::kConst || u.kind() == TermKind::kShift;
    const bool vl = v.kind() == TermKind::kConst || v.kind() == TermKind::kShift;
    if (ul && vl) r = label(u, v);
    else r = maps(tree_of(u), tree_of(v));
    memo_.emplace(key, r);
    return r;
  }

 private:
  bool label(const Term& a, const Term& b) {
    if (a.kind() == TermKind::kConst && b.kind() == TermKind::kConst) return q_.leq(a.label(), b.label());
    if (a.kind() == TermKind::kConst) return leq(a, b.body());
    if (b.kind() == TermKind::kConst) return leq(a.body(), b);
    if (a.subscript() < b.subscript()) return leq(a.body(), b);
    if (a.subscript() == b.subscript()) return leq(a.body(), b.body());
    return leq(a, b.body());
  }

  bool maps(const Tree& x, const Tree& y) {
    const std::size_t n = x.label.size();
    const std::size_t m = y.label.size();
    // Label compatibility table first; the search only consults it.
    std::vector<char> ok(n * m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) ok[i * m + j] = label(x.label[i], y.label[j]) ? 1 : 0;
    }
    std::vector<std::size_t> phi(n, 0);
    // Depth-first assignment in preorder; a parent is assigned before its children.
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
      if (i == n) return true;
      for (std::size_t j = 0; j < m; ++j) {
        if (!ok[i * m + j]) continue;
        if (i > 0 && !ancestor_or_self(y, phi[static_cast<std::size_t>(x.parent[i])], j)) continue;
        phi[i] = j;
        if (go(i + 1)) return true;
      }
      return false;
    };
    return go(0);
  }

  Quasiorder q_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

// F(u) from the definition, as printed strings.
void paths_rec(const Term& u, const std::string& prefix, std::vector<std::string>& out) {
  const Tree tr = tree_of(strip(u));
  for (std::size_t i = 0; i < tr.label.size(); ++i) {
    const std::string a = tr.addr[i].empty() ? "\xCE\xB5" : tr.addr[i];
    const Term& l = tr.label[i];
    if (singleton(l)) {
      out.push_back(prefix + a + ") -> " + std::to_string(strip(l).label()));
    } else {
      paths_rec(l, prefix + a + ";", out);
    }
  }
}

std::vector<std::string> oracle_paths(const Term& u) {
  std::vector<std::string> out;
  paths_rec(u, "(", out);
  return out;
}

std::vector<std::string> library_paths(const Term& u) {
  std::vector<std::string> out;
  for (const auto& p : term_paths(u)) out.push_back(path_to_string(p.steps) + " -> " + std::to_string(p.value));
  return out;
}

std::vector<Term> small_terms(std::size_t q_size, std::size_t max_nodes) {
  TermBounds b;
  b.q_size = q_size;
  b.max_nodes = max_nodes;
  return enumerate_terms(b);
}

}  // namespace

TEST_CASE("parse and print") {
  for (const char* s : {"0", "7", "s[1](0)", "Fq[0](1)", "Fq[1](0,s[w](1),Fo[w^2](0,1))", "s[w+1](s[0](Fq[0](1)))"}) {
    CHECK(to_string(parse_term(s)) == s);
  }
  CHECK(to_string(t(" Fq[0]( 1 , 0 ) ")) == "Fq[0](1,0)");
  CHECK(to_string(t("s[1+w](0)")) == "s[w](0)");
  for (const char* bad : {"", "Fq[0]()", "Fq[w](0)", "s[1]", "s(0)", "x", "Fq[0](1", "Fo[1](0))", "0 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_term(bad), Error);
  }
}

TEST_CASE("hash consing") {
  CHECK(t("Fq[0](1,s[2](0))") == t("Fq[0](1,s[2](0))"));
  CHECK(t("Fq[0](1,s[2](0))").id() == Term::fq(0, {Term::constant(1), Term::shift(Ordinal::natural(2), Term{})}).id());
  CHECK_FALSE(t("Fq[0](1)") == t("Fq[1](0)"));
  CHECK(Term{} == Term::constant(0));
}

TEST_CASE("accessors") {
  const Term u = t("Fo[w](s[1](0),1)");
  CHECK(u.kind() == TermKind::kFOrd);
  CHECK(u.subscript() == Ordinal::omega());
  CHECK(u.children().size() == 2);
  CHECK(u.head() == t("s[w](s[1](0))"));
  CHECK(u.node_count() == 4);
  CHECK(t("s[1](s[0](2))").is_singleton());
  CHECK(t("s[1](s[0](2))").singleton_value() == 2);
  CHECK_FALSE(t("s[1](Fq[0](1))").is_singleton());
}

TEST_CASE("decompose examples") {
  auto d = term_decompose(t("0"));
  CHECK(d.shift == Ordinal{});
  CHECK(d.core == t("0"));
  d = term_decompose(t("s[2](s[1](Fq[0](1)))"));
  CHECK(d.shift == parse_ordinal("w^2+w"));
  CHECK(d.core == t("Fq[0](1)"));
  d = term_decompose(t("s[0](1)"));
  CHECK(d.shift == Ordinal::natural(1));
  CHECK(d.core == t("1"));
  // Absorption in the shift sum.
  d = term_decompose(t("s[1](s[w](Fq[0](1,0)))"));
  CHECK(d.shift == parse_ordinal("w^w"));
}

TEST_CASE("rank examples") {
  CHECK(term_rank(t("0")) == 0);
  CHECK(term_rank(t("Fq[0](1,1)")) == 1);
  CHECK(term_rank(t("s[1](Fq[0](s[2](0)))")) == 3);
  CHECK(term_rank(t("Fo[w^(w+1)](0,s[w^(2)](1))")) == 2);
}

TEST_CASE("validate_term") {
  CHECK_NOTHROW(validate_term(t("Fq[1](0,s[1](1))"), 2, Ordinal::natural(2)));
  CHECK_THROWS_AS(validate_term(t("Fq[2](0)"), 2), Error);
  CHECK_THROWS_AS(validate_term(t("s[2](0)"), 2, Ordinal::natural(2)), Error);
  CHECK_NOTHROW(validate_term(t("s[w](0)"), 1));
}

TEST_CASE("term_tree examples") {
  auto tr = term_tree(t("Fq[0](1)"));
  REQUIRE(tr.size() == 2);
  CHECK(tr.label(0) == t("0"));
  CHECK(tr.label(1) == t("1"));
  tr = term_tree(t("s[1](Fq[0](1))"));
  REQUIRE(tr.size() == 1);
  CHECK(tr.label(0) == t("s[1](Fq[0](1))"));
  tr = term_tree(t("Fo[1](0,1)"));
  REQUIRE(tr.size() == 2);
  CHECK(tr.label(0) == t("s[1](0)"));
  CHECK(tr.label(1) == t("1"));
  CHECK(term_tree(t("Fo[1](Fq[0](1))")).size() == 1);
}

TEST_CASE("term_paths examples") {
  CHECK(library_paths(t("Fq[0](1)")) == std::vector<std::string>{"(\xCE\xB5) -> 0", "(0) -> 1"});
  CHECK(library_paths(t("Fq[0](s[1](Fq[1](0)))")) ==
        std::vector<std::string>{"(\xCE\xB5) -> 0", "(0;\xCE\xB5) -> 1", "(0;0) -> 0"});
  try {
    (void)term_paths(t("0"));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSingletonTerm);
  }
  CHECK_THROWS_AS(term_paths(t("s[1](s[0](1))")), Error);
}

TEST_CASE("term_leq examples") {
  const auto a2 = Quasiorder::antichain(2);
  CHECK(term_leq(a2, t("0"), t("0")));
  CHECK_FALSE(term_leq(a2, t("0"), t("1")));
  CHECK(term_leq(a2, t("0"), t("Fq[1](0)")));
  CHECK_FALSE(term_leq(a2, t("Fq[0](1)"), t("Fq[1](0)")));
  CHECK(term_leq(a2, t("s[1](0)"), t("0")));
  CHECK(term_leq(a2, t("0"), t("s[1](0)")));
  CHECK(term_leq(Quasiorder::chain(2), t("0"), t("1")));
  CHECK_FALSE(term_leq(Quasiorder::chain(2), t("1"), t("0")));
}

TEST_CASE("apply_aut examples") {
  const auto a2 = Quasiorder::antichain(2);
  CHECK(term_apply_aut(a2, {1, 0}, t("Fq[0](1)")) == t("Fq[1](0)"));
  CHECK(term_apply_aut(a2, {1, 0}, t("s[1](0)")) == t("s[1](1)"));
  CHECK(term_apply_aut(a2, {0, 1}, t("Fo[w](0,Fq[1](0))")) == t("Fo[w](0,Fq[1](0))"));
  try {
    (void)term_apply_aut(Quasiorder::chain(2), {1, 0}, t("0"));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAutomorphism);
  }
}

TEST_CASE("rank, decomposition and path laws on enumerated terms") {
  const auto terms = small_terms(2, 4);
  CHECK(terms.size() == 822);
  for (const auto& u : terms) {
    const std::string s = to_string(u);
    REQUIRE(parse_term(s) == u);
    REQUIRE(term_rank(u) == paren_depth(s));
    const auto d = term_decompose(u);
    REQUIRE(d.core.kind() != TermKind::kShift);
    REQUIRE(d.shift.is_zero() == (u.kind() != TermKind::kShift));
    REQUIRE(term_wrap(term_shift_chain(u), d.core) == u);
    if (d.shift.is_zero()) REQUIRE(term_rank(d.core) == term_rank(u));
    else REQUIRE(term_rank(d.core) < term_rank(u));
    // Shift as a sum of w^beta over the chain.
    Ordinal sum;
    for (const auto& b : term_shift_chain(u)) sum = sum + Ordinal::omega_pow(b);
    REQUIRE(sum == d.shift);
    if (!singleton(u)) {
      REQUIRE(library_paths(u) == oracle_paths(u));
      for (const auto& p : term_paths(u)) REQUIRE(!p.steps.empty());
    }
  }
}

TEST_CASE("term_leq matches the brute-force tree oracle") {
  for (const auto& q : {Quasiorder::antichain(2), Quasiorder::chain(2)}) {
    const auto terms = small_terms(2, 4);
    TermOrder order(q);
    BruteOracle oracle(q);
    std::uint64_t pairs = 0;
    for (const auto& u : terms) {
      for (const auto& v : terms) {
        const bool got = order.leq(u, v);
        if (got != oracle.leq(u, v)) FAIL(to_string(u) << " <| " << to_string(v) << ": library " << got);
        ++pairs;
      }
    }
    CHECK(pairs == 822u * 822u);
  }
}

TEST_CASE("term_leq is reflexive and transitive on terms with <= 3 nodes") {
  const auto terms = small_terms(2, 3);
  for (const auto& q : {Quasiorder::antichain(2), Quasiorder::chain(2)}) {
    TermOrder order(q);
    const std::size_t n = terms.size();
    std::vector<char> rel(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = order.leq(terms[i], terms[j]) ? 1 : 0;
      REQUIRE(rel[i * n + i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (rel[j * n + k]) REQUIRE(rel[i * n + k]);
        }
      }
    }
  }
}

TEST_CASE("memo limit does not change answers") {
  const auto terms = small_terms(2, 3);
  const auto q = Quasiorder::antichain(2);
  TermOrder big(q);
  TermOrder tiny(q, 8);
  for (const auto& u : terms) {
    for (const auto& v : terms) REQUIRE(big.leq(u, v) == tiny.leq(u, v));
  }
  CHECK(tiny.memo_size() <= 8);
}

TEST_CASE("single-child F_alpha is equivalent to s_alpha") {
  const auto q = Quasiorder::antichain(2);
  TermOrder order(q);
  for (const auto& u : small_terms(2, 3)) {
    for (const auto& a : {Ordinal{}, Ordinal::natural(1), Ordinal::omega()}) {
      REQUIRE(order.equivalent(Term::ford(a, {u}), Term::shift(a, u)));
    }
  }
}

TEST_CASE("automorphisms preserve the order") {
  // 0 below both 1 and 2; swapping 1 and 2 is an automorphism.
  const auto v = Quasiorder::from_pairs(3, {{0, 1}, {0, 2}});
  TermBounds b;
  b.q_size = 3;
  b.max_nodes = 3;
  const auto terms = enumerate_terms(b);
  for (const auto& q : {Quasiorder::antichain(3), v}) {
    TermOrder order(q);
    for (const auto& g : qo_automorphisms(q)) {
      const auto gi = inverse(g);
      std::vector<Term> img;
      for (const auto& u : terms) {
        img.push_back(term_apply_aut(q, g, u));
        REQUIRE(term_apply_aut(q, gi, img.back()) == u);
      }
      for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = 0; j < terms.size(); ++j) {
          REQUIRE(order.leq(terms[i], terms[j]) == order.leq(img[i], img[j]));
        }
      }
    }
  }
}
