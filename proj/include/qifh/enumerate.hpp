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
#include <vector>

#include "qifh/ordinal.hpp"
#include "qifh/space.hpp"
#include "qifh/term.hpp"

namespace qifh {

struct TermBounds {
  /// Upper bound on syntactic nodes (constants, s, F each count one).
  std::size_t max_nodes = 4;
  /// Constants range over 0..q_size-1.
  std::size_t q_size = 2;
  /// Allowed subscripts for s_alpha and F_alpha.
  std::vector<Ordinal> subscripts = {Ordinal{}, Ordinal::natural(1)};
  /// Child lists of F-terms have 1..max_children entries.
  std::size_t max_children = 2;
  bool allow_shift = true;
  bool allow_ford = true;
};

/// Every term within the bounds, by node count, then Const < s < F_q < F_alpha,
/// then subscripts and children in enumeration order.
std::vector<Term> enumerate_terms(const TermBounds& bounds);

/// Every partial order on {0..n-1}, as spaces named "0".."n-1", in
/// increasing order of the bitmask of strict pairs (i,j), bit i*n+j.
std::vector<FinSpace> enumerate_posets(std::size_t n);

/// Ordinals w^{e_0}*c_0 + ... with at most max_terms summands, strictly
/// decreasing exponents drawn from `exponents`, coefficients 1..max_coeff.
/// Includes 0. Sorted increasingly.
std::vector<Ordinal> enumerate_ordinals(const std::vector<Ordinal>& exponents, std::size_t max_terms,
                                        std::uint64_t max_coeff);

}  // namespace qifh
