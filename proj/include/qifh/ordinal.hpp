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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qifh {

/// A countable ordinal below epsilon_0, held in Cantor normal form
///   w^{e_0}*c_0 + ... + w^{e_n}*c_n,  e_0 > ... > e_n,  c_i >= 1.
/// The empty sum is 0. Values are immutable once built; every constructor
/// normalizes, so structural equality coincides with ordinal equality.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  /// w^exponent * coefficient; coefficient 0 yields 0.
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coefficient = 1);

  bool is_zero() const noexcept { return exps_.empty(); }
  std::size_t term_count() const noexcept { return exps_.size(); }
  const Ordinal& exponent(std::size_t i) const { return exps_.at(i); }
  std::uint64_t coefficient(std::size_t i) const { return coeffs_.at(i); }

  std::optional<std::uint64_t> as_natural() const;
  bool is_successor() const;
  /// Height of the exponent tree; 0 for naturals.
  std::size_t height() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

  std::vector<Ordinal> exps_;
  std::vector<std::uint64_t> coeffs_;
};

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);

/// Ordinal sum; terms of `a` below the leading exponent of `b` are absorbed.
Ordinal operator+(const Ordinal& a, const Ordinal& b);
inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) { return a + b; }

/// The leading power w^{e_0} of a positive ordinal. Throws kZeroOrdinal on 0.
Ordinal ord_star(const Ordinal& a);

/// The unique d with a + d = b. Requires a <= b (kInvalidArgument otherwise).
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

/// Formal base-w1 sum  w1^{x_0}*k_0 + ... ; the image type of f_map.
class WadgeOrdinal {
 public:
  WadgeOrdinal() = default;
  WadgeOrdinal(std::vector<WadgeOrdinal> exponents, std::vector<std::uint64_t> coefficients);

  bool is_zero() const noexcept { return exps_.empty(); }
  std::size_t term_count() const noexcept { return exps_.size(); }
  const WadgeOrdinal& exponent(std::size_t i) const { return exps_.at(i); }
  std::uint64_t coefficient(std::size_t i) const { return coeffs_.at(i); }

  friend std::strong_ordering operator<=>(const WadgeOrdinal& a, const WadgeOrdinal& b);
  friend bool operator==(const WadgeOrdinal& a, const WadgeOrdinal& b);

 private:
  std::vector<WadgeOrdinal> exps_;
  std::vector<std::uint64_t> coeffs_;
};

/// f(0) = 0,  f(w^{a_1}*k_1 + ...) = w1^{f(a_1)}*k_1 + ...
WadgeOrdinal f_map(const Ordinal& a);

/// Grammar:  ord := prod ("+" prod)* ;  prod := "w" ("^" atom)? ("*" nat)? | nat ;
///           atom := nat | "(" ord ")" | "w" ("^" atom)?
/// Non-normal input (e.g. "1+w") is accepted and normalized.
Ordinal parse_ordinal(std::string_view text);
std::string to_string(const Ordinal& a);
/// Same grammar with "w1" as the base symbol.
std::string to_string(const WadgeOrdinal& a);

}  // namespace qifh
