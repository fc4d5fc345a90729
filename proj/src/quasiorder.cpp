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

#include "qifh/quasiorder.hpp"

#include <algorithm>
#include <numeric>

#include "qifh/error.hpp"

namespace qifh {

Quasiorder Quasiorder::from_pairs(std::size_t size,
                                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le) {
  std::vector<bool> rel(size * size, false);
  for (std::size_t i = 0; i < size; ++i) rel[i * size + i] = true;
  for (const auto& [i, j] : le) {
    if (i >= size || j >= size) {
      throw Error(ErrorCode::kInvalidArgument, "quasiorder pair out of range");
    }
    rel[i * size + j] = true;
  }
  // Warshall closure.
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!rel[i * size + m]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (rel[m * size + j]) rel[i * size + j] = true;
      }
    }
  }
  return from_matrix(size, std::move(rel));
}

Quasiorder Quasiorder::from_matrix(std::size_t size, std::vector<bool> relation) {
  if (relation.size() != size * size) {
    throw Error(ErrorCode::kInvalidArgument, "quasiorder matrix has wrong dimensions");
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (!relation[i * size + i]) throw Error(ErrorCode::kInvalidArgument, "quasiorder is not reflexive");
    for (std::size_t j = 0; j < size; ++j) {
      if (!relation[i * size + j]) continue;
      for (std::size_t l = 0; l < size; ++l) {
        if (relation[j * size + l] && !relation[i * size + l]) {
          throw Error(ErrorCode::kInvalidArgument, "quasiorder is not transitive");
        }
      }
    }
  }
  Quasiorder q;
  q.size_ = size;
  q.rel_ = std::move(relation);
  return q;
}

Quasiorder Quasiorder::antichain(std::size_t size) { return from_pairs(size, {}); }

Quasiorder Quasiorder::chain(std::size_t size) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> le;
  for (std::uint32_t i = 0; i + 1 < size; ++i) le.emplace_back(i, i + 1);
  return from_pairs(size, le);
}

void Quasiorder::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != size_) {
    throw Error(ErrorCode::kInvalidArgument, "quasiorder names do not match its size");
  }
  names_ = std::move(names);
}

std::string Quasiorder::name(std::uint32_t q) const {
  if (q < names_.size()) return names_[q];
  return std::to_string(q);
}

bool qo_is_antichain(const Quasiorder& q) {
  for (std::uint32_t i = 0; i < q.size(); ++i) {
    for (std::uint32_t j = 0; j < q.size(); ++j) {
      if (i != j && q.leq(i, j)) return false;
    }
  }
  return true;
}

bool is_automorphism(const Quasiorder& q, const Permutation& g) {
  if (g.size() != q.size()) return false;
  std::vector<bool> seen(g.size(), false);
  for (auto x : g) {
    if (x >= g.size() || seen[x]) return false;
    seen[x] = true;
  }
  for (std::uint32_t i = 0; i < q.size(); ++i) {
    for (std::uint32_t j = 0; j < q.size(); ++j) {
      if (q.leq(i, j) != q.leq(g[i], g[j])) return false;
    }
  }
  return true;
}

std::vector<Permutation> qo_automorphisms(const Quasiorder& q) {
  std::vector<Permutation> out;
  Permutation g(q.size());
  std::iota(g.begin(), g.end(), 0u);
  do {
    if (is_automorphism(q, g)) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = g.at(h[i]);
  return r;
}

Permutation inverse(const Permutation& g) {
  Permutation r(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) r.at(g[i]) = i;
  return r;
}

}  // namespace qifh
