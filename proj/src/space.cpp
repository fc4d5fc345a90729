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

#include "qifh/space.hpp"

#include <functional>
#include <set>

#include "qifh/error.hpp"

namespace qifh {

FinSpace FinSpace::from_pairs(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le,
                              std::vector<std::string> names) {
  if (n > kMaxPoints) throw Error(ErrorCode::kInvalidArgument, "at most 64 points are supported");
  if (!names.empty() && names.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "point names do not match the number of points");
  }
  {
    std::set<std::string> seen;
    for (const auto& nm : names) {
      if (!seen.insert(nm).second) throw Error(ErrorCode::kInvalidArgument, "duplicate point name '" + nm + "'");
    }
  }
  std::vector<PointSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = singleton(i);
  for (const auto& [a, b] : le) {
    if (a >= n || b >= n) throw Error(ErrorCode::kInvalidArgument, "order pair out of range");
    up[a] |= singleton(b);
  }
  // Transitive closure: iterate until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      PointSet acc = up[i];
      for (std::size_t j = 0; j < n; ++j) {
        if ((up[i] >> j) & 1U) acc |= up[j];
      }
      if (acc != up[i]) {
        up[i] = acc;
        changed = true;
      }
    }
  }
  FinSpace s;
  s.up_ = up;
  s.down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((up[i] >> j) & 1U) {
        if (i != j && ((up[j] >> i) & 1U)) {
          throw Error(ErrorCode::kInvalidArgument, "order is not antisymmetric (space is not T0)");
        }
        s.down_[j] |= singleton(i);
      }
    }
  }
  s.names_ = std::move(names);
  return s;
}

FinSpace FinSpace::discrete(std::size_t n) { return from_pairs(n, {}); }

FinSpace FinSpace::chain(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> le;
  for (std::uint32_t i = 0; i + 1 < n; ++i) le.emplace_back(i, i + 1);
  return from_pairs(n, le);
}

FinSpace FinSpace::sierpinski() { return from_pairs(2, {{0, 1}}, {"a", "b"}); }

FinSpace FinSpace::product(const FinSpace& x, const FinSpace& y) {
  const std::size_t n = x.size() * y.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> le;
  std::vector<std::string> names;
  for (std::uint32_t a = 0; a < x.size(); ++a) {
    for (std::uint32_t b = 0; b < y.size(); ++b) {
      names.push_back("(" + x.name(a) + "," + y.name(b) + ")");
      for (std::uint32_t c = 0; c < x.size(); ++c) {
        for (std::uint32_t d = 0; d < y.size(); ++d) {
          if (x.leq(a, c) && y.leq(b, d)) {
            le.emplace_back(a * static_cast<std::uint32_t>(y.size()) + b,
                            c * static_cast<std::uint32_t>(y.size()) + d);
          }
        }
      }
    }
  }
  return from_pairs(n, le, std::move(names));
}

std::string FinSpace::name(std::size_t x) const {
  if (x < names_.size()) return names_[x];
  return std::to_string(x);
}

std::optional<std::size_t> FinSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  if (names_.empty()) {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(name, &pos);
      if (pos == name.size() && v < size()) return v;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

PointSet FinSpace::up_closure(PointSet a) const {
  PointSet r = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if ((a >> i) & 1U) r |= up_[i];
  }
  return r;
}

PointSet FinSpace::down_closure(PointSet a) const {
  PointSet r = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if ((a >> i) & 1U) r |= down_[i];
  }
  return r;
}

PointSet FinSpace::interior(PointSet a) const {
  PointSet r = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (subset_of(up_[i], a)) r |= singleton(i);
  }
  return r;
}

PointSet FinSpace::maximal_points() const {
  PointSet r = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i] == singleton(i)) r |= singleton(i);
  }
  return r;
}

std::vector<PointSet> FinSpace::opens() const {
  if (size() > 24) throw Error(ErrorCode::kInvalidArgument, "open-set enumeration is limited to 24 points");
  std::vector<PointSet> out;
  const PointSet limit = PointSet{1} << size();
  for (PointSet s = 0; s < limit; ++s) {
    if (is_open(s)) out.push_back(s);
  }
  return out;
}

std::string set_to_string(const FinSpace& x, PointSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!((s >> i) & 1U)) continue;
    if (!first) out += ",";
    out += x.name(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

ContMap::ContMap(FinSpace source, FinSpace target, std::vector<std::uint32_t> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() != source_.size()) throw Error(ErrorCode::kInvalidArgument, "map is not total");
  for (auto v : values_) {
    if (v >= target_.size()) throw Error(ErrorCode::kInvalidArgument, "map value outside the target space");
  }
  for (std::size_t a = 0; a < source_.size(); ++a) {
    for (std::size_t b = 0; b < source_.size(); ++b) {
      if (source_.leq(a, b) && !target_.leq(values_[a], values_[b])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "map is not monotone at " + source_.name(a) + " <= " + source_.name(b));
      }
    }
  }
}

PointSet ContMap::image(PointSet a) const {
  PointSet r = 0;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if ((a >> i) & 1U) r |= singleton(values_[i]);
  }
  return r;
}

PointSet ContMap::preimage(PointSet b) const {
  PointSet r = 0;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if ((b >> values_[i]) & 1U) r |= singleton(i);
  }
  return r;
}

bool is_cos(const ContMap& f) {
  if (f.image(f.source().points()) != f.target().points()) return false;
  for (PointSet u : f.source().opens()) {
    if (!f.target().is_open(f.image(u))) return false;
  }
  return true;
}

bool is_meager_in(const FinSpace& x, PointSet sub, PointSet a) {
  if (!subset_of(a, sub)) throw Error(ErrorCode::kInvalidArgument, "set is not inside the subspace");
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!((a >> p) & 1U)) continue;
    const PointSet cl = x.down(p) & sub;
    // Interior of cl in the subspace: points whose relative up-set stays in cl.
    for (std::size_t z = 0; z < x.size(); ++z) {
      if (((cl >> z) & 1U) && subset_of(x.up(z) & sub, cl)) return false;
    }
  }
  return true;
}

bool is_meager(const FinSpace& x, PointSet a) { return is_meager_in(x, x.points(), a); }

bool is_meager_by_decomposition(const FinSpace& x, PointSet a) {
  const std::vector<PointSet> opens = x.opens();
  const PointSet all = x.points();
  auto interior = [&](PointSet s) {
    PointSet r = 0;
    for (PointSet u : opens) {
      if (subset_of(u, s)) r |= u;
    }
    return r;
  };
  auto closure = [&](PointSet s) { return all & ~interior(all & ~s); };
  auto nowhere_dense = [&](PointSet s) { return interior(closure(s)) == 0; };

  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((a >> i) & 1U) members.push_back(i);
  }
  if (members.empty()) return true;
  // Enumerate set partitions as restricted growth strings.
  std::vector<PointSet> blocks;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == members.size()) {
      for (PointSet b : blocks) {
        if (!nowhere_dense(b)) return false;
      }
      return true;
    }
    for (std::size_t b = 0; b <= blocks.size(); ++b) {
      if (b == blocks.size()) {
        blocks.push_back(singleton(members[k]));
        if (rec(k + 1)) return true;
        blocks.pop_back();
      } else {
        blocks[b] |= singleton(members[k]);
        if (rec(k + 1)) return true;
        blocks[b] &= ~singleton(members[k]);
      }
    }
    return false;
  };
  return rec(0);
}

PointSet cat_quantifier(const ContMap& f, PointSet a) {
  if (!is_cos(f)) throw Error(ErrorCode::kNotOpenSurjection, "category quantifier needs a continuous open surjection");
  PointSet r = 0;
  for (std::size_t y = 0; y < f.target().size(); ++y) {
    const PointSet fib = f.fiber(y);
    if (!is_meager_in(f.source(), fib, a & fib)) r |= singleton(y);
  }
  return r;
}

// ---------------------------------------------------------------------------

void QPartition::validate() const {
  if (values.size() != space.size()) throw Error(ErrorCode::kInvalidArgument, "partition is not total");
  for (auto v : values) {
    if (!q.contains(v)) throw Error(ErrorCode::kInvalidArgument, "partition value outside Q");
  }
}

PointSet QPartition::preimage(std::uint32_t label) const {
  PointSet r = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == label) r |= singleton(i);
  }
  return r;
}

QPartition compose(const QPartition& a, const ContMap& f) {
  if (!(a.space == f.target())) throw Error(ErrorCode::kDifferentSpaces, "partition is not on the map's target");
  QPartition r{f.source(), a.q, {}};
  for (std::size_t x = 0; x < f.source().size(); ++x) r.values.push_back(a.values.at(f(x)));
  return r;
}

namespace {

// Backtracking over value assignments in point order; `accept(x, y)` prunes
// per-point choices before the monotonicity check against earlier points.
template <class Accept, class Visit>
bool search_monotone(const FinSpace& x, const FinSpace& y, Accept&& accept, Visit&& visit) {
  std::vector<std::uint32_t> vals(x.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == x.size()) return visit(vals);
    for (std::uint32_t v = 0; v < y.size(); ++v) {
      if (!accept(i, v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (x.leq(j, i) && !y.leq(vals[j], v)) ok = false;
        if (x.leq(i, j) && !y.leq(v, vals[j])) ok = false;
      }
      if (!ok) continue;
      vals[i] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool wadge_leq(const QPartition& a, const QPartition& b) {
  if (!(a.space == b.space)) throw Error(ErrorCode::kDifferentSpaces, "partitions live on different spaces");
  if (!(a.q == b.q)) throw Error(ErrorCode::kDifferentQ, "partitions use different quasiorders");
  a.validate();
  b.validate();
  return search_monotone(
      a.space, a.space, [&](std::size_t i, std::uint32_t v) { return a.q.leq(a.values[i], b.values[v]); },
      [](const std::vector<std::uint32_t>&) { return true; });
}

std::vector<std::vector<std::uint32_t>> enum_monotone_maps(const FinSpace& x, const FinSpace& y) {
  std::vector<std::vector<std::uint32_t>> out;
  search_monotone(
      x, y, [](std::size_t, std::uint32_t) { return true; },
      [&](const std::vector<std::uint32_t>& v) {
        out.push_back(v);
        return false;
      });
  return out;
}

std::vector<ContMap> enum_cos(const FinSpace& x, const FinSpace& y) {
  std::vector<ContMap> out;
  for (auto& vals : enum_monotone_maps(x, y)) {
    ContMap f(x, y, std::move(vals));
    if (is_cos(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace qifh
