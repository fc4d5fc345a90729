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
#include <string>
#include <utility>

#include "qifh/hierarchy.hpp"

namespace qifh {

namespace {

// Visits every subset of `u` in increasing numeric order.
template <class F>
void for_each_subset(PointSet u, F&& f) {
  PointSet s = 0;
  while (true) {
    f(s);
    if (s == u) break;
    s = (s - u) & u;
  }
}

}  // namespace

SetFamily SetFamily::power_set(PointSet universe) {
  SetFamily f;
  f.universe_ = universe;
  f.all_ = true;
  return f;
}

SetFamily SetFamily::of(PointSet universe, std::vector<PointSet> sets) {
  for (PointSet s : sets) {
    if (!subset_of(s, universe)) throw Error(ErrorCode::kInvalidArgument, "set leaves the universe of its family");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  SetFamily f;
  f.universe_ = universe;
  const std::uint64_t full = std::uint64_t{1} << std::min(cardinality(universe), 63);
  if (cardinality(universe) < 63 && sets.size() == full) {
    f.all_ = true;
  } else {
    f.sets_ = std::move(sets);
  }
  return f;
}

bool SetFamily::contains(PointSet s) const {
  if (all_) return subset_of(s, universe_);
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

std::vector<PointSet> SetFamily::members() const {
  if (!all_) return sets_;
  std::vector<PointSet> out;
  for_each_subset(universe_, [&](PointSet s) { out.push_back(s); });
  return out;
}

std::size_t SetFamily::count() const {
  if (all_) return std::size_t{1} << cardinality(universe_);
  return sets_.size();
}

SetFamily SetFamily::restrict(PointSet v) const {
  if (all_) return power_set(universe_ & v);
  std::vector<PointSet> out;
  out.reserve(sets_.size());
  for (PointSet s : sets_) out.push_back(s & v);
  return of(universe_ & v, std::move(out));
}

bool SetFamily::is_lattice() const {
  if (all_) return true;
  if (!contains(0) || !contains(universe_)) return false;
  for (PointSet a : sets_) {
    for (PointSet b : sets_) {
      if (!contains(a | b) || !contains(a & b)) return false;
    }
  }
  return true;
}

Base::Base(FinSpace space, PointSet carrier, std::vector<BaseStep> steps)
    : space_(std::move(space)), carrier_(carrier), steps_(std::move(steps)) {
  if (!subset_of(carrier_, space_.points())) throw Error(ErrorCode::kInvalidArgument, "carrier leaves the space");
  if (steps_.empty() || !steps_.front().threshold.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "base steps must start at threshold 0");
  }
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const SetFamily& lv = steps_[i].level;
    if (lv.universe() != carrier_) throw Error(ErrorCode::kInvalidArgument, "level universe differs from the carrier");
    if (!lv.is_lattice()) {
      throw Error(ErrorCode::kInvalidArgument, "level " + std::to_string(i) + " is not closed under union and intersection");
    }
    if (i == 0) continue;
    if (!(steps_[i - 1].threshold < steps_[i].threshold)) {
      throw Error(ErrorCode::kInvalidArgument, "base thresholds must increase");
    }
    for (PointSet s : steps_[i - 1].level.members()) {
      if (!lv.contains(s) || !lv.contains(carrier_ & ~s)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "level " + std::to_string(i) + " misses a set or complement of the previous level");
      }
    }
  }
  if (!steps_.back().level.is_power_set()) {
    throw Error(ErrorCode::kInvalidArgument, "the last base level must be the power set");
  }
}

std::size_t Base::step_index(const Ordinal& alpha) const {
  std::size_t i = 0;
  while (i + 1 < steps_.size() && steps_[i + 1].threshold <= alpha) ++i;
  return i;
}

Base base_borel(const FinSpace& x) {
  const PointSet all = x.points();
  SetFamily opens = SetFamily::of(all, x.opens());
  std::vector<BaseStep> steps;
  steps.push_back({Ordinal{}, opens});
  steps.push_back({Ordinal::natural(1), SetFamily::power_set(all)});
  return Base(x, all, std::move(steps));
}

Base base_shift(const Base& base, const Ordinal& beta) {
  std::vector<BaseStep> steps;
  steps.push_back({Ordinal{}, base.level(beta)});
  for (const auto& st : base.steps()) {
    if (st.threshold > beta) {
      Ordinal t = left_subtract(beta, st.threshold);
      // beta + t may coincide for different thresholds only if they are
      // equal, so thresholds stay strictly increasing.
      if (t.is_zero()) continue;
      steps.push_back({t, st.level});
    }
  }
  // Drop repeated power-set tails.
  std::vector<BaseStep> out;
  for (auto& st : steps) {
    if (!out.empty() && out.back().level.is_power_set()) break;
    out.push_back(std::move(st));
  }
  return Base(base.space(), base.carrier(), std::move(out));
}

Base base_restrict(const Base& base, PointSet v) {
  if (!subset_of(v, base.space().points())) throw Error(ErrorCode::kInvalidArgument, "restriction set leaves the space");
  const PointSet c = base.carrier() & v;
  std::vector<BaseStep> steps;
  for (const auto& st : base.steps()) steps.push_back({st.threshold, st.level.restrict(c)});
  return Base(base.space(), c, std::move(steps));
}

namespace {

// Candidate members of `level` inside each target, largest first, ties by
// increasing mask.
std::vector<std::vector<PointSet>> candidates_inside(const std::vector<PointSet>& members,
                                                     const std::vector<PointSet>& targets) {
  std::vector<std::vector<PointSet>> out(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (PointSet s : members) {
      if (subset_of(s, targets[i])) out[i].push_back(s);
    }
    std::stable_sort(out[i].begin(), out[i].end(), [](PointSet a, PointSet b) {
      if (cardinality(a) != cardinality(b)) return cardinality(a) > cardinality(b);
      return a < b;
    });
  }
  return out;
}

// Enumerates reducts of `targets` in preference order; `accept` decides
// whether to stop.
bool search_reducts(const std::vector<std::vector<PointSet>>& cand, PointSet goal, std::size_t i, PointSet used,
                    std::vector<PointSet>& pick, const std::function<bool(const std::vector<PointSet>&)>& accept) {
  if (i == cand.size()) return used == goal && accept(pick);
  // Prune: the remaining candidates cannot cover what is missing.
  PointSet reachable = used;
  for (std::size_t j = i; j < cand.size(); ++j) {
    for (PointSet s : cand[j]) reachable |= s;
  }
  if (!subset_of(goal, reachable)) return false;
  for (PointSet s : cand[i]) {
    if ((s & used) != 0) continue;
    pick[i] = s;
    if (search_reducts(cand, goal, i + 1, used | s, pick, accept)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<PointSet>> reduce_sequence(const SetFamily& level, const std::vector<PointSet>& sets) {
  PointSet goal = 0;
  for (PointSet s : sets) goal |= s;
  const auto cand = candidates_inside(level.members(), sets);
  std::vector<PointSet> pick(sets.size(), 0);
  std::optional<std::vector<PointSet>> result;
  search_reducts(cand, goal, 0, 0, pick, [&](const std::vector<PointSet>& p) {
    result = p;
    return true;
  });
  return result;
}

bool level_has_reduction(const SetFamily& level, std::size_t max_length) {
  const std::vector<PointSet> m = level.members();
  std::vector<std::size_t> idx;
  // Nondecreasing index sequences: reduction does not depend on order.
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (idx.size() >= 2) {
      std::vector<PointSet> seq;
      for (auto k : idx) seq.push_back(m[k]);
      if (!reduce_sequence(level, seq)) return false;
    }
    if (idx.size() == max_length) return true;
    for (std::size_t k = from; k < m.size(); ++k) {
      idx.push_back(k);
      const bool ok = rec(k);
      idx.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0);
}

TFamily tfamily_from_addresses(std::vector<std::pair<Address, PointSet>> entries) {
  std::sort(entries.begin(), entries.end());
  if (entries.empty() || !entries.front().first.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a tree family needs a root entry");
  }
  TFamily f(entries.front().second);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const Address& a = entries[i].first;
    if (a == entries[i - 1].first) throw Error(ErrorCode::kInvalidArgument, "duplicate node " + address_to_string(a));
    Address parent(a.begin(), a.end() - 1);
    auto p = f.find(parent);
    if (!p || f.children(*p).size() != a.back()) {
      throw Error(ErrorCode::kInvalidArgument, "nodes do not form a normal tree at " + address_to_string(a));
    }
    f.add_child(*p, entries[i].second);
  }
  return f;
}

std::vector<PointSet> components(const TFamily& f) {
  const std::size_t n = f.size();
  std::vector<PointSet> below(n, 0);  // union of sets strictly below
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c : f.children(i)) below[i] |= f.label(c) | below[c];
  }
  std::vector<PointSet> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.label(i) & ~below[i];
  return out;
}

bool is_monotone(const TFamily& f) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!subset_of(f.label(i), f.label(static_cast<std::size_t>(f.parent(i))))) return false;
  }
  return true;
}

bool is_reduced(const TFamily& f) {
  if (!is_monotone(f)) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    PointSet seen = 0;
    for (std::size_t c : f.children(i)) {
      if ((seen & f.label(c)) != 0) return false;
      seen |= f.label(c);
    }
  }
  return true;
}

TFamily monotonize(const TFamily& f) {
  TFamily out = f;
  for (std::size_t i = f.size(); i-- > 0;) {
    PointSet s = out.label(i);
    for (std::size_t c : f.children(i)) s |= out.label(c);
    out.set_label(i, s);
  }
  return out;
}

TFamily reduce_tfamily(const TFamily& f, const SetFamily& level) {
  if (!is_monotone(f)) throw Error(ErrorCode::kInvalidArgument, "reduct requires a monotone family");
  const std::vector<PointSet> members = level.members();
  std::vector<std::size_t> groups;  // parents with children, in preorder
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.is_leaf(i)) groups.push_back(i);
  }
  TFamily v = f;
  std::function<bool(std::size_t)> solve = [&](std::size_t g) -> bool {
    if (g == groups.size()) return true;
    const std::size_t p = groups[g];
    const auto& kids = f.children(p);
    std::vector<PointSet> targets;
    PointSet goal = 0;
    for (std::size_t c : kids) {
      targets.push_back(v.label(p) & f.label(c));
      goal |= targets.back();
    }
    const auto cand = candidates_inside(members, targets);
    std::vector<PointSet> pick(kids.size(), 0);
    return search_reducts(cand, goal, 0, 0, pick, [&](const std::vector<PointSet>& chosen) {
      for (std::size_t k = 0; k < kids.size(); ++k) v.set_label(kids[k], chosen[k]);
      return solve(g + 1);
    });
  };
  if (!solve(0)) throw Error(ErrorCode::kNoReduct, "the level admits no reduct of this family");
  return v;
}

TFamily trivial_tfamily(const TFamily& shape, const Address& rho, PointSet carrier) {
  auto r = shape.find(rho);
  if (!r) throw Error(ErrorCode::kNodeNotInTree, "node " + address_to_string(rho) + " is not in the tree");
  TFamily out = shape;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.set_label(i, out.is_ancestor_or_self(i, *r) ? carrier : 0);
  }
  return out;
}

}  // namespace qifh
