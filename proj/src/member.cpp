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
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "qifh/hierarchy.hpp"

namespace qifh {

namespace {

struct MemoKey {
  PointSet carrier;
  std::uint32_t term;
  std::uint32_t shift;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::uint64_t h = k.carrier * 0x9e3779b97f4a7c15ULL;
    h ^= (std::uint64_t{k.term} << 20) ^ k.shift;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Structural recursion for a fixed partition:
//   singleton q  -> A = q on the carrier
//   s_a(v)       -> v over the w^a-shifted base
//   F_q(u_i)     -> level sets U_i in the carrier with A|U_i in L(U_i, u_i)
//                   and A = q off their union
//   F_a(u_i)     -> the same for i >= 1, with the residue in L(., s_a(u_0))
class MemberSolver {
 public:
  MemberSolver(const Base& base, const std::vector<std::uint32_t>& values, bool reduced_only)
      : base_(base), values_(values), reduced_only_(reduced_only) {
    if (values_.size() != base_.space().size()) throw Error(ErrorCode::kInvalidArgument, "partition size differs from the space");
  }

  bool holds(const Term& u) { return rec(Ordinal{}, base_.carrier(), u); }

 private:
  std::uint32_t shift_id(const Ordinal& a) {
    auto [it, inserted] = shift_ids_.emplace(a, static_cast<std::uint32_t>(shifts_.size()));
    if (inserted) shifts_.push_back(a);
    return it->second;
  }

  PointSet label_set(std::uint32_t q) const {
    PointSet s = 0;
    for (std::size_t p = 0; p < values_.size(); ++p) {
      if (values_[p] == q) s |= singleton(p);
    }
    return s;
  }

  const std::vector<PointSet>& candidates(const Ordinal& shift, PointSet carrier) {
    const auto key = std::make_pair(base_.step_index(shift), carrier);
    auto it = cand_.find(key);
    if (it == cand_.end()) {
      it = cand_.emplace(key, base_.steps()[key.first].level.restrict(carrier).members()).first;
    }
    return it->second;
  }

  // Unions of one good set per child (pairwise disjoint in reduced mode).
  std::vector<PointSet> unions(const Ordinal& shift, PointSet carrier, std::span<const Term> kids) {
    std::vector<PointSet> reach{0};
    const std::vector<PointSet> cand = candidates(shift, carrier);
    for (const Term& c : kids) {
      std::vector<PointSet> good;
      for (PointSet s : cand) {
        if (rec(shift, s, c)) good.push_back(s);
      }
      std::unordered_set<PointSet> seen;
      std::vector<PointSet> next;
      for (PointSet w : reach) {
        for (PointSet s : good) {
          if (reduced_only_ && (w & s) != 0) continue;
          if (seen.insert(w | s).second) next.push_back(w | s);
        }
      }
      reach = std::move(next);
      if (reach.empty()) break;
    }
    return reach;
  }

  bool rec(const Ordinal& shift, PointSet carrier, const Term& u) {
    if (u.is_singleton()) return subset_of(carrier, label_set(u.singleton_value()));
    if (u.is_s_term()) return rec(shift + Ordinal::omega_pow(u.subscript()), carrier, u.body());
    const MemoKey key{carrier, u.id(), shift_id(shift)};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    if (u.kind() == TermKind::kFQ) {
      const PointSet need = carrier & ~label_set(u.label());
      for (PointSet w : unions(shift, carrier, u.children())) {
        if (subset_of(need, w)) {
          ok = true;
          break;
        }
      }
    } else {
      const Term head = u.head();
      for (PointSet w : unions(shift, carrier, u.children().subspan(1))) {
        if (rec(shift, carrier & ~w, head)) {
          ok = true;
          break;
        }
      }
    }
    memo_.emplace(key, ok);
    return ok;
  }

  const Base& base_;
  const std::vector<std::uint32_t>& values_;
  bool reduced_only_;
  std::map<Ordinal, std::uint32_t> shift_ids_;
  std::vector<Ordinal> shifts_;
  std::map<std::pair<std::size_t, PointSet>, std::vector<PointSet>> cand_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
};

void check_partition(const QPartition& a, const Base& base) {
  if (!(a.space == base.space())) throw Error(ErrorCode::kDifferentSpaces, "partition and base live on different spaces");
  a.validate();
}

}  // namespace

bool member(const std::vector<std::uint32_t>& values, const Term& u, const Base& base, MemberOptions options) {
  MemberSolver solver(base, values, options.reduced_only);
  return solver.holds(u);
}

bool member(const QPartition& a, const Term& u, const Base& base, MemberOptions options) {
  check_partition(a, base);
  return member(a.values, u, base, options);
}

bool member_enum(const QPartition& a, const Term& u, const Base& base, std::uint64_t budget) {
  check_partition(a, base);
  bool found = false;
  enumerate_families(u, base, budget, [&](const UFamily& f) {
    const Evaluation ev = family_eval_unchecked(f, base);
    if (!ev.determined()) return true;
    for (std::size_t p = 0; p < ev.values.size(); ++p) {
      if (((base.carrier() >> p) & 1U) && ev.values[p] != a.values[p]) return true;
    }
    found = true;
    return false;
  });
  return found;
}

std::vector<std::vector<std::uint32_t>> all_labelings(const Base& base, std::size_t q_size) {
  const std::size_t n = base.space().size();
  std::vector<std::size_t> pts;
  for (std::size_t p = 0; p < n; ++p) {
    if ((base.carrier() >> p) & 1U) pts.push_back(p);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(n, kNoLabel);
  for (auto p : pts) cur[p] = 0;
  if (q_size == 0) return pts.empty() ? std::vector<std::vector<std::uint32_t>>{cur} : out;
  while (true) {
    out.push_back(cur);
    // Increment with the last carrier point least significant.
    std::size_t k = pts.size();
    while (k > 0) {
      --k;
      if (++cur[pts[k]] < q_size) break;
      cur[pts[k]] = 0;
      if (k == 0) return out;
    }
    if (pts.empty()) return out;
  }
}

std::vector<std::vector<std::uint32_t>> level_set(const Base& base, std::size_t q_size, const Term& u,
                                                  MemberOptions options) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& v : all_labelings(base, q_size)) {
    if (member(v, u, base, options)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<QPartition> level_set(const FinSpace& x, const Quasiorder& q, const Term& u) {
  std::vector<QPartition> out;
  for (auto& v : level_set(base_borel(x), q.size(), u)) out.push_back(QPartition{x, q, std::move(v)});
  return out;
}

std::vector<std::vector<std::uint32_t>> level_set_enum(const Base& base, std::size_t q_size, const Term& u,
                                                       std::uint64_t budget) {
  std::set<std::vector<std::uint32_t>> found;
  enumerate_families(u, base, budget, [&](const UFamily& f) {
    Evaluation ev = family_eval_unchecked(f, base);
    if (!ev.determined()) return true;
    for (auto v : ev.values) {
      if (v != kNoLabel && v >= q_size) return true;
    }
    found.insert(std::move(ev.values));
    return true;
  });
  return {found.begin(), found.end()};
}

}  // namespace qifh
