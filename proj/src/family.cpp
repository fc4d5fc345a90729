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
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "qifh/hierarchy.hpp"

namespace qifh {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kInvalidFamily, (where.empty() ? std::string("root") : where) + ": " + what);
}

TFamily shape_with(const LabeledTree<Term>& tree, const std::vector<PointSet>& sets) {
  TFamily f(sets.at(0));
  for (std::size_t i = 1; i < tree.size(); ++i) f.add_child(static_cast<std::size_t>(tree.parent(i)), sets.at(i));
  return f;
}

std::string node_path(const std::string& where, const Address& a) {
  std::string s = where;
  if (!s.empty()) s += "/";
  return s + (a.empty() ? std::string("e") : address_to_string(a));
}

void validate_rec(const UFamily& f, const Base& base, const Ordinal& shift, PointSet carrier,
                  const std::string& where) {
  if (f.carrier != carrier) invalid(where, "carrier differs from the expected component");
  if (f.term.is_singleton()) {
    if (!f.sets.empty() || !f.nested.empty()) invalid(where, "a singleton term only admits the whole family");
    return;
  }
  const Decomposition d = term_decompose(f.term);
  const Ordinal s2 = shift + d.shift;
  const LabeledTree<Term> tree = term_tree(d.core);
  if (f.sets.size() != tree.size()) invalid(where, "expected " + std::to_string(tree.size()) + " node sets");
  if (f.nested.size() != tree.size()) invalid(where, "expected " + std::to_string(tree.size()) + " nested families");
  if (f.sets[0] != carrier) invalid(where, "the root set must equal the carrier");
  const SetFamily level = base.level(s2).restrict(carrier);
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (!level.contains(f.sets[i])) invalid(node_path(where, tree.address(i)), "set is not in the level");
    if (i > 0 && !subset_of(f.sets[i], f.sets[static_cast<std::size_t>(tree.parent(i))])) {
      invalid(node_path(where, tree.address(i)), "family is not monotone");
    }
  }
  const auto comps = components(shape_with(tree, f.sets));
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (!(f.nested[i].term == tree.label(i))) invalid(node_path(where, tree.address(i)), "nested family has the wrong term");
    validate_rec(f.nested[i], base, s2, comps[i], node_path(where, tree.address(i)));
  }
}

void collect_labels(const UFamily& f, std::vector<std::uint64_t>& masks) {
  if (f.term.is_singleton()) {
    const std::uint32_t q = f.term.singleton_value();
    if (q >= 64) throw Error(ErrorCode::kInvalidArgument, "evaluation supports at most 64 labels");
    for (std::size_t p = 0; p < masks.size(); ++p) {
      if ((f.carrier >> p) & 1U) masks[p] |= std::uint64_t{1} << q;
    }
    return;
  }
  for (const auto& g : f.nested) collect_labels(g, masks);
}

LabeledTree<Term> core_tree(const Term& u) { return term_tree(term_decompose(u).core); }

UFamily reduct_rec(const UFamily& f, const Base& base, const Ordinal& shift) {
  if (f.is_whole()) return f;
  const Decomposition d = term_decompose(f.term);
  const Ordinal s2 = shift + d.shift;
  const LabeledTree<Term> tree = term_tree(d.core);
  const TFamily v = reduce_tfamily(shape_with(tree, f.sets), base.level(s2).restrict(f.carrier));
  const auto comps = components(v);
  UFamily out{f.term, f.carrier, {}, {}};
  for (std::size_t i = 0; i < tree.size(); ++i) {
    out.sets.push_back(v.label(i));
    out.nested.push_back(reduct_rec(family_restrict(f.nested[i], comps[i]), base, s2));
  }
  return out;
}

UFamily pull_rec(const ContMap& map, const UFamily& f) {
  UFamily out{f.term, map.preimage(f.carrier), {}, {}};
  for (PointSet s : f.sets) out.sets.push_back(map.preimage(s));
  for (const auto& g : f.nested) out.nested.push_back(pull_rec(map, g));
  return out;
}

UFamily push_rec(const ContMap& map, const UFamily& f, PointSet target) {
  if (f.is_whole()) return whole_family(f.term, target);
  const LabeledTree<Term> tree = core_tree(f.term);
  UFamily out{f.term, target, {}, {}};
  for (PointSet s : f.sets) out.sets.push_back(cat_quantifier(map, s) & target);
  out.sets[0] = target;
  const auto comps = components(shape_with(tree, out.sets));
  for (std::size_t i = 0; i < tree.size(); ++i) out.nested.push_back(push_rec(map, f.nested[i], comps[i]));
  return out;
}

// Family enumeration over a fixed base.
class FamilyEnumerator {
 public:
  FamilyEnumerator(const Base& base, std::uint64_t cap) : base_(base), cap_(cap) {}

  std::uint64_t count(const Term& u, const Ordinal& shift, PointSet carrier) {
    if (u.is_singleton()) return 1;
    auto key = std::make_tuple(u.id(), shift, carrier);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Decomposition d = term_decompose(u);
    const Ordinal s2 = shift + d.shift;
    const LabeledTree<Term> tree = term_tree(d.core);
    std::uint64_t total = 0;
    for_each_tfamily(tree, s2, carrier, [&](const std::vector<PointSet>& sets) {
      const auto comps = components(shape_with(tree, sets));
      std::uint64_t prod = 1;
      for (std::size_t i = 0; i < tree.size() && prod > 0; ++i) prod = sat_mul(prod, count(tree.label(i), s2, comps[i]));
      total = sat_add(total, prod);
      return total < cap_;
    });
    memo_.emplace(key, total);
    return total;
  }

  bool generate(const Term& u, const Ordinal& shift, PointSet carrier, const std::function<bool(const UFamily&)>& k) {
    if (u.is_singleton()) return k(whole_family(u, carrier));
    const Decomposition d = term_decompose(u);
    const Ordinal s2 = shift + d.shift;
    const LabeledTree<Term> tree = term_tree(d.core);
    return for_each_tfamily(tree, s2, carrier, [&](const std::vector<PointSet>& sets) {
      const auto comps = components(shape_with(tree, sets));
      UFamily f{u, carrier, sets, std::vector<UFamily>(tree.size())};
      std::function<bool(std::size_t)> fill = [&](std::size_t i) -> bool {
        if (i == tree.size()) return k(f);
        return generate(tree.label(i), s2, comps[i], [&](const UFamily& g) {
          f.nested[i] = g;
          return fill(i + 1);
        });
      };
      return fill(0);
    });
  }

 private:
  static std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a + b < a ? ~std::uint64_t{0} : a + b; }
  static std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > ~std::uint64_t{0} / a) return ~std::uint64_t{0};
    return a * b;
  }

  // Monotone assignments with sets[0] = carrier, every set in the level.
  bool for_each_tfamily(const LabeledTree<Term>& tree, const Ordinal& shift, PointSet carrier,
                        const std::function<bool(const std::vector<PointSet>&)>& k) {
    const std::vector<PointSet> members = base_.level(shift).restrict(carrier).members();
    std::vector<PointSet> sets(tree.size(), 0);
    sets[0] = carrier;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (i == tree.size()) return k(sets);
      const PointSet parent = sets[static_cast<std::size_t>(tree.parent(i))];
      for (PointSet s : members) {
        if (!subset_of(s, parent)) continue;
        sets[i] = s;
        if (!rec(i + 1)) return false;
      }
      return true;
    };
    return rec(1);
  }

  const Base& base_;
  std::uint64_t cap_;
  std::map<std::tuple<std::uint32_t, Ordinal, PointSet>, std::uint64_t> memo_;
};

}  // namespace

UFamily whole_family(const Term& u, PointSet carrier) {
  if (!u.is_singleton()) throw Error(ErrorCode::kInvalidArgument, "the whole family exists only for singleton terms");
  return UFamily{u, carrier, {}, {}};
}

void validate_family(const UFamily& f, const Base& base) {
  validate_rec(f, base, Ordinal{}, base.carrier(), "");
}

Evaluation family_eval(const UFamily& f, const Base& base) {
  validate_family(f, base);
  return family_eval_unchecked(f, base);
}

Evaluation family_eval_unchecked(const UFamily& f, const Base& base) {
  const std::size_t n = base.space().size();
  std::vector<std::uint64_t> masks(n, 0);
  collect_labels(f, masks);
  Evaluation ev;
  ev.values.assign(n, kNoLabel);
  for (std::size_t p = 0; p < n; ++p) {
    if (!((base.carrier() >> p) & 1U)) continue;
    const std::uint64_t m = masks[p];
    if (m == 0) throw Error(ErrorCode::kInvalidFamily, "point " + base.space().name(p) + " lies in no terminating component");
    if (std::popcount(m) == 1) {
      ev.values[p] = static_cast<std::uint32_t>(std::countr_zero(m));
    } else if (!ev.undetermined) {
      Undetermined u{p, {}};
      for (std::uint32_t q = 0; q < 64; ++q) {
        if ((m >> q) & 1U) u.labels.push_back(q);
      }
      ev.undetermined = std::move(u);
    }
  }
  return ev;
}

UFamily family_restrict(const UFamily& f, PointSet v) {
  if (f.is_whole()) return whole_family(f.term, f.carrier & v);
  const LabeledTree<Term> tree = core_tree(f.term);
  UFamily out{f.term, f.carrier & v, {}, {}};
  for (PointSet s : f.sets) out.sets.push_back(s & v);
  const auto comps = components(shape_with(tree, out.sets));
  for (std::size_t i = 0; i < tree.size(); ++i) out.nested.push_back(family_restrict(f.nested[i], comps[i]));
  return out;
}

UFamily family_reduct(const UFamily& f, const Base& base) {
  validate_family(f, base);
  return reduct_rec(f, base, Ordinal{});
}

bool is_reduced_family(const UFamily& f) {
  if (f.is_whole()) return true;
  if (!is_reduced(shape_with(core_tree(f.term), f.sets))) return false;
  return std::all_of(f.nested.begin(), f.nested.end(), [](const UFamily& g) { return is_reduced_family(g); });
}

UFamily family_pullback(const ContMap& map, const UFamily& f, const Base& target_base) {
  if (!(map.target() == target_base.space())) {
    throw Error(ErrorCode::kInvalidFamily, "the map's target is not the family's space");
  }
  validate_family(f, target_base);
  return pull_rec(map, f);
}

UFamily family_pushforward(const ContMap& map, const UFamily& f, const Base& source_base) {
  if (!is_cos(map)) throw Error(ErrorCode::kNotOpenSurjection, "the map is not a continuous open surjection");
  if (!(map.source() == source_base.space())) {
    throw Error(ErrorCode::kInvalidFamily, "the map's source is not the family's space");
  }
  validate_family(f, source_base);
  return push_rec(map, f, cat_quantifier(map, f.carrier));
}

std::uint64_t count_families(const Term& u, const Base& base, std::uint64_t cap) {
  FamilyEnumerator e(base, cap);
  return std::min(e.count(u, Ordinal{}, base.carrier()), cap);
}

void enumerate_families(const Term& u, const Base& base, std::uint64_t budget,
                        const std::function<bool(const UFamily&)>& visit) {
  const std::uint64_t cap = budget == ~std::uint64_t{0} ? budget : budget + 1;
  FamilyEnumerator e(base, cap);
  if (e.count(u, Ordinal{}, base.carrier()) > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "more than " + std::to_string(budget) + " families");
  }
  e.generate(u, Ordinal{}, base.carrier(), visit);
}

}  // namespace qifh
