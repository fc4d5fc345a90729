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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qifh/ltree.hpp"
#include "qifh/ordinal.hpp"
#include "qifh/quasiorder.hpp"

namespace qifh {

enum class TermKind : std::uint8_t {
  kConst,  // q
  kShift,  // s_alpha(u)
  kFQ,     // F_q(u_0, ..., u_n)
  kFOrd,   // F_alpha(u_0, ..., u_n)
};

namespace detail {
struct TermNode;
}

/// A ground term over {q, s_alpha, F_q, F_alpha} with finite child lists.
///
/// Terms are hash-consed: structurally equal terms share one node, so
/// equality, hashing and memo keys are O(1). Nodes live for the whole
/// process; a Term is a cheap copyable handle.
class Term {
 public:
  /// The constant 0.
  Term();

  static Term constant(std::uint32_t q);
  static Term shift(const Ordinal& alpha, const Term& body);
  static Term fq(std::uint32_t q, std::vector<Term> children);
  static Term ford(const Ordinal& alpha, std::vector<Term> children);

  TermKind kind() const noexcept;
  /// q for Const and FQ.
  std::uint32_t label() const;
  /// alpha for Shift and FOrd.
  const Ordinal& subscript() const;
  /// u for s_alpha(u).
  Term body() const;
  /// Children of FQ / FOrd; empty otherwise.
  std::span<const Term> children() const noexcept;
  /// s_alpha(u_0) for F_alpha(u_0, ...): the root label of its tree.
  Term head() const;

  std::uint32_t id() const noexcept;
  /// Height of the syntactic tree (a constant has rank 0).
  std::size_t rank() const noexcept;
  std::size_t node_count() const noexcept;

  bool is_const() const noexcept { return kind() == TermKind::kConst; }
  bool is_s_term() const noexcept { return kind() == TermKind::kShift; }
  bool is_f_term() const noexcept { return kind() == TermKind::kFQ || kind() == TermKind::kFOrd; }
  /// q or s_b0 ... s_bm (q).
  bool is_singleton() const noexcept;
  /// q(u) for a singleton term.
  std::uint32_t singleton_value() const;

  friend bool operator==(const Term& a, const Term& b) noexcept { return a.node_ == b.node_; }

  struct Hash {
    std::size_t operator()(const Term& t) const noexcept { return t.id(); }
  };

 private:
  explicit Term(const detail::TermNode* node) : node_(node) {}
  static Term intern(detail::TermNode&& proto);

  const detail::TermNode* node_;
};

/// sh(u) and u'.
struct Decomposition {
  Ordinal shift;
  Term core;
};

Decomposition term_decompose(const Term& u);

/// Rewraps `core` in the s-chain with the given subscripts (outermost first).
Term term_wrap(const std::vector<Ordinal>& chain, const Term& core);
/// Subscripts of the leading s-chain of u, outermost first.
std::vector<Ordinal> term_shift_chain(const Term& u);

std::size_t term_rank(const Term& u);

/// Throws kInvalidArgument unless every constant is < q_size and every
/// subscript is < gamma (when a bound is given).
void validate_term(const Term& u, std::size_t q_size, const std::optional<Ordinal>& gamma = std::nullopt);

/// The relation u <| v, decided by structural recursion over its
/// sixteen defining cases. One TermOrder holds a memo table for a session
/// of queries against a fixed Q; the table is not shared between objects
/// and is invisible in results.
class TermOrder {
 public:
  explicit TermOrder(const Quasiorder& q, std::size_t memo_limit = std::size_t{1} << 22)
      : q_(q), memo_limit_(memo_limit) {}

  bool leq(const Term& u, const Term& v);
  bool equivalent(const Term& u, const Term& v) { return leq(u, v) && leq(v, u); }
  const Quasiorder& quasiorder() const noexcept { return q_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  bool compute(const Term& u, const Term& v);
  bool q_leq(std::uint32_t a, std::uint32_t b) const;

  Quasiorder q_;
  std::size_t memo_limit_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

bool term_leq(const Quasiorder& q, const Term& u, const Term& v);

/// T(u): labels are constants or s-terms.
LabeledTree<Term> term_tree(const Term& u);

/// One element of F(u) with its terminal constant.
struct TermPath {
  std::vector<Address> steps;
  std::uint32_t value;
};

/// F(u) in depth-first order. Throws kSingletonTerm on singleton terms.
std::vector<TermPath> term_paths(const Term& u);
std::string path_to_string(const std::vector<Address>& steps);

/// Relabels constants by g. Throws kNotAutomorphism unless g is an
/// automorphism of q.
Term term_apply_aut(const Quasiorder& q, const Permutation& g, const Term& u);

/// term := nat | "s" "[" ord "]" "(" term ")" | "Fq" "[" nat "]" "(" term ("," term)* ")"
///       | "Fo" "[" ord "]" "(" term ("," term)* ")"
Term parse_term(std::string_view text);
std::string to_string(const Term& u);

}  // namespace qifh
