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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qifh/error.hpp"

namespace qifh {

/// A node of a tree in w^*: the sequence of child indices from the root.
using Address = std::vector<std::uint32_t>;

/// "" for the root; one digit per level when every index is < 10,
/// otherwise dot-separated indices ("3.12.0").
std::string address_to_string(const Address& a);
Address parse_address(std::string_view s);
bool is_prefix(const Address& a, const Address& b);

/// A finite labeled tree. Nodes are stored in insertion order, which is
/// preorder for every tree built by add_child/graft from the root down.
template <class Label>
class LabeledTree {
 public:
  explicit LabeledTree(Label root_label) { nodes_.push_back(Node{std::move(root_label), -1, {}, {}}); }

  std::size_t add_child(std::size_t parent, Label label) {
    Node n{std::move(label), static_cast<std::ptrdiff_t>(parent), {}, nodes_.at(parent).address};
    n.address.push_back(static_cast<std::uint32_t>(nodes_[parent].children.size()));
    nodes_.push_back(std::move(n));
    const std::size_t id = nodes_.size() - 1;
    nodes_[parent].children.push_back(id);
    return id;
  }

  /// Appends a copy of `sub` as the next child of `parent`; returns its root id.
  std::size_t graft(std::size_t parent, const LabeledTree& sub) {
    std::vector<std::size_t> map(sub.size());
    map[0] = add_child(parent, sub.label(0));
    for (std::size_t i = 1; i < sub.size(); ++i) {
      map[i] = add_child(map[static_cast<std::size_t>(sub.parent(i))], sub.label(i));
    }
    return map[0];
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const Label& label(std::size_t i) const { return nodes_.at(i).label; }
  void set_label(std::size_t i, Label l) { nodes_.at(i).label = std::move(l); }
  std::ptrdiff_t parent(std::size_t i) const { return nodes_.at(i).parent; }
  const std::vector<std::size_t>& children(std::size_t i) const { return nodes_.at(i).children; }
  const Address& address(std::size_t i) const { return nodes_.at(i).address; }
  bool is_leaf(std::size_t i) const { return nodes_.at(i).children.empty(); }

  std::optional<std::size_t> find(const Address& a) const {
    std::size_t cur = 0;
    for (auto idx : a) {
      const auto& ch = nodes_[cur].children;
      if (idx >= ch.size()) return std::nullopt;
      cur = ch[idx];
    }
    return cur;
  }

  /// True iff node i is a prefix of (or equal to) node j.
  bool is_ancestor_or_self(std::size_t i, std::size_t j) const {
    std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(j);
    while (cur >= 0) {
      if (static_cast<std::size_t>(cur) == i) return true;
      cur = nodes_[static_cast<std::size_t>(cur)].parent;
    }
    return false;
  }

  std::vector<std::ptrdiff_t> parents() const {
    std::vector<std::ptrdiff_t> p;
    p.reserve(nodes_.size());
    for (const auto& n : nodes_) p.push_back(n.parent);
    return p;
  }

 private:
  struct Node {
    Label label;
    std::ptrdiff_t parent;
    std::vector<std::size_t> children;
    Address address;
  };
  std::vector<Node> nodes_;
};

template <class Label>
using LabeledForest = std::vector<LabeledTree<Label>>;

/// (T,t) <=_h (V,v): some order-preserving phi : T -> V with
/// t(x) <= v(phi(x)) for every node. phi need not be injective.
///
/// emb(x,y)   : the subtree at x maps into the subtree at y with x |-> y.
/// reach(x,y) : emb(x,y') for some y' at or below y.
/// Both tables are filled bottom-up (reverse preorder), so each
/// (node, candidate) pair is decided once.
template <class Label, class LabelLeq>
bool hom_leq(const LabeledTree<Label>& t, const LabeledTree<Label>& v, LabelLeq&& label_leq) {
  const std::size_t n = t.size();
  const std::size_t m = v.size();
  std::vector<char> reach(n * m, 0);
  for (std::size_t xi = n; xi-- > 0;) {
    for (std::size_t yi = m; yi-- > 0;) {
      bool emb = label_leq(t.label(xi), v.label(yi));
      for (std::size_t c : t.children(xi)) {
        if (!emb) break;
        emb = reach[c * m + yi] != 0;
      }
      bool r = emb;
      for (std::size_t c : v.children(yi)) {
        if (r) break;
        r = reach[xi * m + c] != 0;
      }
      reach[xi * m + yi] = r ? 1 : 0;
    }
  }
  return reach[0] != 0;
}

/// Every tree of f maps into some tree of g.
template <class Label, class LabelLeq>
bool forest_hom_leq(const LabeledForest<Label>& f, const LabeledForest<Label>& g, LabelLeq&& label_leq) {
  if (f.empty() || g.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "forests must be nonempty");
  }
  for (const auto& t : f) {
    bool found = false;
    for (const auto& v : g) {
      if (hom_leq(t, v, label_leq)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace qifh
