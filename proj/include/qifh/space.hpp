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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qifh/quasiorder.hpp"

namespace qifh {

/// A subset of the points of a finite space, bit i <-> point i.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

inline int cardinality(PointSet s) noexcept { return std::popcount(s); }
inline bool subset_of(PointSet a, PointSet b) noexcept { return (a & ~b) == 0; }
inline PointSet singleton(std::size_t x) noexcept { return PointSet{1} << x; }
inline PointSet full_set(std::size_t n) noexcept { return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

/// A finite T0 space, given by its specialization order. Opens are the
/// up-sets, closed sets the down-sets, and continuous maps the monotone ones.
class FinSpace {
 public:
  FinSpace() = default;

  /// Reflexive-transitive closure of `le`; throws kInvalidArgument when the
  /// closure is not antisymmetric.
  static FinSpace from_pairs(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le,
                             std::vector<std::string> names = {});
  static FinSpace discrete(std::size_t n);
  static FinSpace chain(std::size_t n);
  /// Points a < b.
  static FinSpace sierpinski();
  /// Product order; point (x, y) has index x * |Y| + y.
  static FinSpace product(const FinSpace& x, const FinSpace& y);

  std::size_t size() const noexcept { return up_.size(); }
  PointSet points() const noexcept { return full_set(size()); }
  bool leq(std::size_t x, std::size_t y) const { return (up_.at(x) >> y) & 1U; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(std::size_t x) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  PointSet up(std::size_t x) const { return up_.at(x); }
  PointSet down(std::size_t x) const { return down_.at(x); }
  PointSet up_closure(PointSet a) const;
  PointSet down_closure(PointSet a) const;

  bool is_open(PointSet a) const { return up_closure(a) == a; }
  bool is_closed(PointSet a) const { return down_closure(a) == a; }
  /// Largest open subset.
  PointSet interior(PointSet a) const;
  /// Smallest closed superset.
  PointSet closure(PointSet a) const { return down_closure(a); }
  PointSet maximal_points() const;

  /// All up-sets, in increasing numeric order of their bitmasks.
  std::vector<PointSet> opens() const;

  friend bool operator==(const FinSpace& a, const FinSpace& b) { return a.up_ == b.up_; }

 private:
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
  std::vector<std::string> names_;
};

std::string set_to_string(const FinSpace& x, PointSet s);

/// A monotone (= continuous) map between finite spaces.
class ContMap {
 public:
  /// Throws kInvalidArgument unless `values` is a total monotone map.
  ContMap(FinSpace source, FinSpace target, std::vector<std::uint32_t> values);

  const FinSpace& source() const noexcept { return source_; }
  const FinSpace& target() const noexcept { return target_; }
  const std::vector<std::uint32_t>& values() const noexcept { return values_; }
  std::uint32_t operator()(std::size_t x) const { return values_.at(x); }

  PointSet image(PointSet a) const;
  PointSet preimage(PointSet b) const;
  PointSet fiber(std::size_t y) const { return preimage(singleton(y)); }

 private:
  FinSpace source_;
  FinSpace target_;
  std::vector<std::uint32_t> values_;
};

/// Continuous open surjection: onto, and images of up-sets are up-sets.
bool is_cos(const ContMap& f);

/// Meager = a finite union of nowhere dense sets. Decided by the singleton
/// criterion: A is meager iff int(cl{x}) is empty for every x in A.
bool is_meager(const FinSpace& x, PointSet a);
/// Same question inside the subspace `sub`, whose topology consists of the
/// traces of ambient up-sets. Requires a subset of sub.
bool is_meager_in(const FinSpace& x, PointSet sub, PointSet a);
/// Reference decision: search all partitions of A for one whose blocks are
/// all nowhere dense, with interior and closure taken from the explicit
/// list of opens. Exponential; for validation only.
bool is_meager_by_decomposition(const FinSpace& x, PointSet a);

/// f[A] = { y | A meets f^-1(y) in a non-meager subset of the fiber }.
/// Throws kNotOpenSurjection when f is not a continuous open surjection.
PointSet cat_quantifier(const ContMap& f, PointSet a);

/// A total map from points to elements of Q.
struct QPartition {
  FinSpace space;
  Quasiorder q;
  std::vector<std::uint32_t> values;

  /// Throws kInvalidArgument when the map is not total or leaves Q.
  void validate() const;
  PointSet preimage(std::uint32_t label) const;
  friend bool operator==(const QPartition& a, const QPartition& b) {
    return a.space == b.space && a.q == b.q && a.values == b.values;
  }
};

/// A o f, a partition of the source of f.
QPartition compose(const QPartition& a, const ContMap& f);

/// A <=_W B: some monotone self-map f with A(x) <=_Q B(f(x)) for all x.
/// Throws kDifferentSpaces / kDifferentQ.
bool wadge_leq(const QPartition& a, const QPartition& b);

/// Every monotone map X -> Y (as value vectors), in lexicographic order.
std::vector<std::vector<std::uint32_t>> enum_monotone_maps(const FinSpace& x, const FinSpace& y);

/// Every continuous open surjection X -> Y, in lexicographic order of values.
std::vector<ContMap> enum_cos(const FinSpace& x, const FinSpace& y);

}  // namespace qifh
