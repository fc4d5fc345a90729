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

#include "qifh/term.hpp"

#include <cctype>
#include <deque>
#include <functional>
#include <mutex>

#include "qifh/error.hpp"

namespace qifh {

namespace detail {

struct TermNode {
  TermKind kind = TermKind::kConst;
  std::uint32_t label = 0;
  Ordinal alpha;
  std::vector<Term> kids;

  // Filled in by the interner.
  std::uint32_t id = 0;
  std::uint32_t rank = 0;
  std::uint32_t nodes = 1;
  bool singleton = true;
  std::uint32_t singleton_q = 0;
  const TermNode* head = nullptr;
};

}  // namespace detail

namespace {

using detail::TermNode;

struct NodeKey {
  TermKind kind;
  std::uint32_t label;
  std::string alpha;
  std::vector<std::uint32_t> kids;

  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::size_t h = std::hash<std::string>()(k.alpha);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(k.kind));
    mix(k.label);
    for (auto c : k.kids) mix(c);
    return h;
  }
};

class Interner {
 public:
  static Interner& instance() {
    static Interner interner;
    return interner;
  }

  const TermNode* lookup_or_insert(NodeKey&& key, TermNode&& proto) {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    proto.id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(std::move(proto));
    const TermNode* p = &nodes_.back();
    table_.emplace(std::move(key), p);
    return p;
  }

 private:
  std::mutex mu_;
  std::deque<TermNode> nodes_;
  std::unordered_map<NodeKey, const TermNode*, NodeKeyHash> table_;
};

const TermNode* const_zero() {
  static const TermNode* zero = [] {
    TermNode proto;
    NodeKey key{TermKind::kConst, 0, {}, {}};
    return Interner::instance().lookup_or_insert(std::move(key), std::move(proto));
  }();
  return zero;
}

}  // namespace

Term::Term() : node_(const_zero()) {}

Term Term::intern(detail::TermNode&& proto) {
  NodeKey key{proto.kind, proto.label, {}, {}};
  if (proto.kind == TermKind::kShift || proto.kind == TermKind::kFOrd) key.alpha = to_string(proto.alpha);
  for (const auto& k : proto.kids) key.kids.push_back(k.id());

  proto.rank = 0;
  proto.nodes = 1;
  for (const auto& k : proto.kids) {
    proto.rank = std::max<std::uint32_t>(proto.rank, static_cast<std::uint32_t>(k.rank()) + 1);
    proto.nodes += static_cast<std::uint32_t>(k.node_count());
  }
  switch (proto.kind) {
    case TermKind::kConst:
      proto.singleton = true;
      proto.singleton_q = proto.label;
      break;
    case TermKind::kShift:
      proto.singleton = proto.kids[0].is_singleton();
      proto.singleton_q = proto.singleton ? proto.kids[0].singleton_value() : 0;
      break;
    default:
      proto.singleton = false;
      break;
  }
  if (proto.kind == TermKind::kFOrd) proto.head = Term::shift(proto.alpha, proto.kids[0]).node_;
  return Term(Interner::instance().lookup_or_insert(std::move(key), std::move(proto)));
}

Term Term::constant(std::uint32_t q) {
  TermNode proto;
  proto.kind = TermKind::kConst;
  proto.label = q;
  return intern(std::move(proto));
}

Term Term::shift(const Ordinal& alpha, const Term& body) {
  TermNode proto;
  proto.kind = TermKind::kShift;
  proto.alpha = alpha;
  proto.kids.push_back(body);
  return intern(std::move(proto));
}

Term Term::fq(std::uint32_t q, std::vector<Term> children) {
  if (children.empty()) throw Error(ErrorCode::kInvalidArgument, "F_q needs at least one argument");
  TermNode proto;
  proto.kind = TermKind::kFQ;
  proto.label = q;
  proto.kids = std::move(children);
  return intern(std::move(proto));
}

Term Term::ford(const Ordinal& alpha, std::vector<Term> children) {
  if (children.empty()) throw Error(ErrorCode::kInvalidArgument, "F_alpha needs at least one argument");
  TermNode proto;
  proto.kind = TermKind::kFOrd;
  proto.alpha = alpha;
  proto.kids = std::move(children);
  return intern(std::move(proto));
}

TermKind Term::kind() const noexcept { return node_->kind; }

std::uint32_t Term::label() const {
  if (node_->kind != TermKind::kConst && node_->kind != TermKind::kFQ) {
    throw Error(ErrorCode::kInvalidArgument, "term has no Q label: " + to_string(*this));
  }
  return node_->label;
}

const Ordinal& Term::subscript() const {
  if (node_->kind != TermKind::kShift && node_->kind != TermKind::kFOrd) {
    throw Error(ErrorCode::kInvalidArgument, "term has no ordinal subscript: " + to_string(*this));
  }
  return node_->alpha;
}

Term Term::body() const {
  if (node_->kind != TermKind::kShift) throw Error(ErrorCode::kInvalidArgument, "not an s-term");
  return node_->kids[0];
}

std::span<const Term> Term::children() const noexcept {
  if (node_->kind == TermKind::kFQ || node_->kind == TermKind::kFOrd) return node_->kids;
  return {};
}

Term Term::head() const {
  if (node_->kind != TermKind::kFOrd) throw Error(ErrorCode::kInvalidArgument, "head() needs an F_alpha term");
  return Term(node_->head);
}

std::uint32_t Term::id() const noexcept { return node_->id; }
std::size_t Term::rank() const noexcept { return node_->rank; }
std::size_t Term::node_count() const noexcept { return node_->nodes; }
bool Term::is_singleton() const noexcept { return node_->singleton; }

std::uint32_t Term::singleton_value() const {
  if (!node_->singleton) throw Error(ErrorCode::kSingletonTerm, "not a singleton term: " + to_string(*this));
  return node_->singleton_q;
}

// ---------------------------------------------------------------------------

Decomposition term_decompose(const Term& u) {
  Decomposition d{Ordinal{}, u};
  while (d.core.is_s_term()) {
    d.shift = d.shift + Ordinal::omega_pow(d.core.subscript());
    d.core = d.core.body();
  }
  return d;
}

std::vector<Ordinal> term_shift_chain(const Term& u) {
  std::vector<Ordinal> chain;
  for (Term t = u; t.is_s_term(); t = t.body()) chain.push_back(t.subscript());
  return chain;
}

Term term_wrap(const std::vector<Ordinal>& chain, const Term& core) {
  Term t = core;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) t = Term::shift(*it, t);
  return t;
}

std::size_t term_rank(const Term& u) { return u.rank(); }

void validate_term(const Term& u, std::size_t q_size, const std::optional<Ordinal>& gamma) {
  switch (u.kind()) {
    case TermKind::kConst:
    case TermKind::kFQ:
      if (u.label() >= q_size) {
        throw Error(ErrorCode::kInvalidArgument,
                    "constant " + std::to_string(u.label()) + " is not in Q (size " + std::to_string(q_size) + ")");
      }
      break;
    case TermKind::kShift:
    case TermKind::kFOrd:
      if (gamma && !(u.subscript() < *gamma)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "subscript " + to_string(u.subscript()) + " is not below gamma = " + to_string(*gamma));
      }
      break;
  }
  if (u.is_s_term()) validate_term(u.body(), q_size, gamma);
  for (const auto& c : u.children()) validate_term(c, q_size, gamma);
}

bool term_leq(const Quasiorder& q, const Term& u, const Term& v) {
  TermOrder order(q);
  return order.leq(u, v);
}

LabeledTree<Term> term_tree(const Term& u) {
  switch (u.kind()) {
    case TermKind::kConst:
    case TermKind::kShift:
      return LabeledTree<Term>(u);
    case TermKind::kFQ: {
      LabeledTree<Term> t(Term::constant(u.label()));
      for (const auto& c : u.children()) t.graft(0, term_tree(c));
      return t;
    }
    case TermKind::kFOrd: {
      LabeledTree<Term> t(u.head());
      auto kids = u.children();
      for (std::size_t i = 1; i < kids.size(); ++i) t.graft(0, term_tree(kids[i]));
      return t;
    }
  }
  return LabeledTree<Term>(u);
}

namespace {

void collect_paths(const Term& u, std::vector<Address>& prefix, std::vector<TermPath>& out) {
  const LabeledTree<Term> tree = term_tree(term_decompose(u).core);
  for (std::size_t i = 0; i < tree.size(); ++i) {
    prefix.push_back(tree.address(i));
    const Term& label = tree.label(i);
    if (label.is_singleton()) {
      out.push_back(TermPath{prefix, label.singleton_value()});
    } else {
      collect_paths(label, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TermPath> term_paths(const Term& u) {
  if (u.is_singleton()) throw Error(ErrorCode::kSingletonTerm, "F(u) is defined only for non-singleton terms");
  std::vector<TermPath> out;
  std::vector<Address> prefix;
  collect_paths(u, prefix, out);
  return out;
}

std::string path_to_string(const std::vector<Address>& steps) {
  std::string s = "(";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) s += ";";
    s += steps[i].empty() ? "\xCE\xB5" : address_to_string(steps[i]);
  }
  return s + ")";
}

namespace {

Term relabel(const Permutation& g, const Term& u) {
  switch (u.kind()) {
    case TermKind::kConst:
      return Term::constant(g.at(u.label()));
    case TermKind::kShift:
      return Term::shift(u.subscript(), relabel(g, u.body()));
    case TermKind::kFQ:
    case TermKind::kFOrd: {
      std::vector<Term> kids;
      for (const auto& c : u.children()) kids.push_back(relabel(g, c));
      return u.kind() == TermKind::kFQ ? Term::fq(g.at(u.label()), std::move(kids))
                                       : Term::ford(u.subscript(), std::move(kids));
    }
  }
  return u;
}

}  // namespace

Term term_apply_aut(const Quasiorder& q, const Permutation& g, const Term& u) {
  if (!is_automorphism(q, g)) throw Error(ErrorCode::kNotAutomorphism, "permutation is not an automorphism of Q");
  validate_term(u, q.size());
  return relabel(g, u);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse,
                "term literal '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::uint32_t nat() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 0xffffffffULL) fail("constant too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return static_cast<std::uint32_t>(v);
  }

  Ordinal bracket_ordinal() {
    expect("[");
    const std::size_t close = s_.find(']', pos_);
    if (close == std::string_view::npos) fail("missing ']'");
    Ordinal a = parse_ordinal(s_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return a;
  }

  std::vector<Term> args() {
    expect("(");
    std::vector<Term> kids{term()};
    while (eat(",")) kids.push_back(term());
    expect(")");
    return kids;
  }

  Term term() {
    skip_ws();
    if (eat("Fq")) {
      expect("[");
      const std::uint32_t q = nat();
      expect("]");
      return Term::fq(q, args());
    }
    if (eat("Fo")) {
      Ordinal a = bracket_ordinal();
      return Term::ford(a, args());
    }
    if (eat("s")) {
      Ordinal a = bracket_ordinal();
      expect("(");
      Term body = term();
      expect(")");
      return Term::shift(a, body);
    }
    return Term::constant(nat());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string to_string(const Term& u) {
  switch (u.kind()) {
    case TermKind::kConst:
      return std::to_string(u.label());
    case TermKind::kShift:
      return "s[" + to_string(u.subscript()) + "](" + to_string(u.body()) + ")";
    case TermKind::kFQ:
    case TermKind::kFOrd: {
      std::string s = u.kind() == TermKind::kFQ ? "Fq[" + std::to_string(u.label()) + "]("
                                                : "Fo[" + to_string(u.subscript()) + "](";
      auto kids = u.children();
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i > 0) s += ",";
        s += to_string(kids[i]);
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace qifh
