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
#include <map>
#include <optional>
#include <vector>

#include "qifh/ltree.hpp"
#include "qifh/ordinal.hpp"
#include "qifh/space.hpp"
#include "qifh/term.hpp"

namespace qifh {

// ---------------------------------------------------------------------------
// Set families and bases

/// A family of subsets of `universe`. The full power set is kept symbolic.
class SetFamily {
 public:
  SetFamily() = default;
  static SetFamily power_set(PointSet universe);
  /// Throws kInvalidArgument if some set leaves the universe.
  static SetFamily of(PointSet universe, std::vector<PointSet> sets);

  PointSet universe() const noexcept { return universe_; }
  bool is_power_set() const noexcept { return all_; }
  bool contains(PointSet s) const;
  /// Members in increasing numeric order.
  std::vector<PointSet> members() const;
  std::size_t count() const;
  /// { V & S : S in this family } over universe V.
  SetFamily restrict(PointSet v) const;
  /// Contains the empty set and the universe; closed under binary union and
  /// intersection.
  bool is_lattice() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.universe_ == b.universe_ && a.members() == b.members();
  }

 private:
  PointSet universe_ = 0;
  bool all_ = false;
  std::vector<PointSet> sets_;
};

struct BaseStep {
  Ordinal threshold;
  SetFamily level;
};

/// A hierarchy base on a carrier inside a finite space: level(a) is the
/// level of the last step whose threshold is <= a. Thresholds start at 0
/// and increase; the last step is the power set of the carrier, so every
/// ordinal has a level.
class Base {
 public:
  /// Validates: each level a lattice on the carrier, each later level
  /// containing every earlier set and its complement, last level full.
  Base(FinSpace space, PointSet carrier, std::vector<BaseStep> steps);

  const FinSpace& space() const noexcept { return space_; }
  PointSet carrier() const noexcept { return carrier_; }
  const std::vector<BaseStep>& steps() const noexcept { return steps_; }
  std::size_t step_index(const Ordinal& alpha) const;
  const SetFamily& level(const Ordinal& alpha) const { return steps_[step_index(alpha)].level; }

 private:
  FinSpace space_;
  PointSet carrier_ = 0;
  std::vector<BaseStep> steps_;
};

/// Open sets at level 0, everything from level 1 on (every subset of a
/// finite T0 space is a difference of opens).
Base base_borel(const FinSpace& x);
/// level'(a) = level(beta + a).
Base base_shift(const Base& base, const Ordinal& beta);
/// Every level intersected with v; the carrier becomes v.
Base base_restrict(const Base& base, PointSet v);

/// Finds a reduct of `sets` in `level`: pairwise disjoint V_i in the level,
/// V_i inside sets[i], same union. Largest sets first for earlier indices.
std::optional<std::vector<PointSet>> reduce_sequence(const SetFamily& level, const std::vector<PointSet>& sets);

/// Bounded check of the reduction property: every sequence of members of
/// length <= max_length has a reduct.
bool level_has_reduction(const SetFamily& level, std::size_t max_length = 3);

// ---------------------------------------------------------------------------
// Tree-indexed families

/// {U_tau}_{tau in T} for a finite tree T; node ids follow the tree's preorder.
using TFamily = LabeledTree<PointSet>;

/// Builds a family from (address, set) pairs; the addresses must form a
/// finite normal tree containing the root.
TFamily tfamily_from_addresses(std::vector<std::pair<Address, PointSet>> entries);

/// ~U_tau = U_tau minus the sets at nodes strictly below tau.
std::vector<PointSet> components(const TFamily& f);
bool is_monotone(const TFamily& f);
/// Monotone with pairwise disjoint siblings.
bool is_reduced(const TFamily& f);
/// U'_tau = union of U at tau and below.
TFamily monotonize(const TFamily& f);

/// Top-down reduct of a monotone family inside `level`: siblings are
/// reduced in preorder of their parent, each sibling group by backtracking
/// over level members with the largest sets tried first for the earliest
/// child. Throws kNoReduct when no reduced family exists.
TFamily reduce_tfamily(const TFamily& f, const SetFamily& level);

/// The reduced family whose only nonempty component is `rho`, equal to
/// the carrier. Throws kNodeNotInTree.
TFamily trivial_tfamily(const TFamily& shape, const Address& rho, PointSet carrier);

// ---------------------------------------------------------------------------
// u-families

/// A u-family on `carrier`. For a singleton term it is the whole-carrier
/// family and `sets`/`nested` are empty. Otherwise `sets[i]` is the set at
/// node i of T(u') (preorder, sets[0] = carrier), and `nested[i]` is the
/// family for node i's label on that node's component.
struct UFamily {
  Term term;
  PointSet carrier = 0;
  std::vector<PointSet> sets;
  std::vector<UFamily> nested;

  bool is_whole() const { return term.is_singleton(); }
};

UFamily whole_family(const Term& u, PointSet carrier);

/// Throws kInvalidFamily with a description of the first violation.
void validate_family(const UFamily& f, const Base& base);

inline constexpr std::uint32_t kNoLabel = 0xffffffffU;

struct Undetermined {
  std::size_t point;
  std::vector<std::uint32_t> labels;
};

/// Result of the mind-change evaluation. `values` is indexed by the points
/// of the ambient space; points outside the carrier hold kNoLabel.
struct Evaluation {
  std::vector<std::uint32_t> values;
  std::optional<Undetermined> undetermined;

  bool determined() const noexcept { return !undetermined.has_value(); }
};

/// Labels every carrier point by the constants of the terminating
/// components that contain it.
Evaluation family_eval(const UFamily& f, const Base& base);
/// Same, for families already known to be valid (skips validation).
Evaluation family_eval_unchecked(const UFamily& f, const Base& base);

/// The family restricted to v (sets intersected, nested families restricted
/// to the new components).
UFamily family_restrict(const UFamily& f, PointSet v);

/// A reduced family whose terminating components lie inside those of f.
/// Throws kNoReduct when some level on the way admits no reduct.
UFamily family_reduct(const UFamily& f, const Base& base);
bool is_reduced_family(const UFamily& f);

/// Every set replaced by its preimage; determines A o f when f determines A.
UFamily family_pullback(const ContMap& map, const UFamily& f, const Base& target_base);

/// Every set replaced by its category-quantifier image (nested families are
/// cut down to the components of the pushed family). Throws kNotOpenSurjection.
UFamily family_pushforward(const ContMap& map, const UFamily& f, const Base& source_base);

/// Number of structurally valid u-families over the base, saturating at
/// `cap`.
std::uint64_t count_families(const Term& u, const Base& base, std::uint64_t cap = ~std::uint64_t{0});

/// Calls visit(family) for every structurally valid u-family over the base
/// (deterministic order); stops early when visit returns false. Throws
/// kBudgetExceeded when there are more than `budget` families.
void enumerate_families(const Term& u, const Base& base, std::uint64_t budget,
                        const std::function<bool(const UFamily&)>& visit);

// ---------------------------------------------------------------------------
// Level membership

struct MemberOptions {
  /// Restrict the search to reduced families.
  bool reduced_only = false;
};

/// Decides whether the partition given by `values` (indexed by ambient
/// points; only the carrier matters) lies in L(carrier, u) over the base.
bool member(const std::vector<std::uint32_t>& values, const Term& u, const Base& base, MemberOptions options = {});
bool member(const QPartition& a, const Term& u, const Base& base, MemberOptions options = {});

/// Reference decision by exhaustive family enumeration. Throws
/// kBudgetExceeded past `budget` families.
bool member_enum(const QPartition& a, const Term& u, const Base& base, std::uint64_t budget = 1'000'000);

/// All partitions of the carrier in L(X, u): value vectors over the ambient
/// points (kNoLabel outside the carrier) in lexicographic order, first point
/// most significant.
std::vector<std::vector<std::uint32_t>> level_set(const Base& base, std::size_t q_size, const Term& u,
                                                  MemberOptions options = {});
std::vector<QPartition> level_set(const FinSpace& x, const Quasiorder& q, const Term& u);

/// The same set computed from the enumerated families.
std::vector<std::vector<std::uint32_t>> level_set_enum(const Base& base, std::size_t q_size, const Term& u,
                                                       std::uint64_t budget = 1'000'000);

/// All q_size^|carrier| labelings of the carrier, in the order used by level_set.
std::vector<std::vector<std::uint32_t>> all_labelings(const Base& base, std::size_t q_size);

}  // namespace qifh
