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
#include <string>
#include <utility>
#include <vector>

namespace qifh {

using Permutation = std::vector<std::uint32_t>;

/// A finite quasiorder on {0, ..., k-1}.
class Quasiorder {
 public:
  Quasiorder() = default;

  /// Reflexive-transitive closure of the given pairs (i <= j).
  static Quasiorder from_pairs(std::size_t size, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le);
  /// Validates an explicit relation matrix (row-major, size*size).
  static Quasiorder from_matrix(std::size_t size, std::vector<bool> relation);
  static Quasiorder antichain(std::size_t size);
  static Quasiorder chain(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool leq(std::uint32_t i, std::uint32_t j) const { return rel_[i * size_ + j]; }
  bool contains(std::uint32_t q) const noexcept { return q < size_; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name(std::uint32_t q) const;

  friend bool operator==(const Quasiorder& a, const Quasiorder& b) {
    return a.size_ == b.size_ && a.rel_ == b.rel_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<bool> rel_;
  std::vector<std::string> names_;
};

bool qo_is_antichain(const Quasiorder& q);

/// Every permutation g with  i <= j  <=>  g(i) <= g(j), in lexicographic order.
std::vector<Permutation> qo_automorphisms(const Quasiorder& q);

bool is_automorphism(const Quasiorder& q, const Permutation& g);

Permutation compose(const Permutation& g, const Permutation& h);  // g after h
Permutation inverse(const Permutation& g);

}  // namespace qifh
