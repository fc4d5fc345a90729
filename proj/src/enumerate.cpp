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

#include "qifh/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace qifh {

namespace {

// Child lists of 1..max_children terms whose node counts sum to `total`.
void child_lists(const std::vector<std::vector<Term>>& by_size, std::size_t total, std::size_t max_children,
                 std::vector<Term>& cur, const std::function<void(const std::vector<Term>&)>& emit) {
  if (total == 0) {
    if (!cur.empty()) emit(cur);
    return;
  }
  if (cur.size() == max_children) return;
  for (std::size_t s = 1; s <= total; ++s) {
    for (const Term& t : by_size[s]) {
      cur.push_back(t);
      child_lists(by_size, total - s, max_children, cur, emit);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Term> enumerate_terms(const TermBounds& b) {
  std::vector<std::vector<Term>> by_size(b.max_nodes + 1);
  for (std::size_t n = 1; n <= b.max_nodes; ++n) {
    auto& out = by_size[n];
    if (n == 1) {
      for (std::uint32_t q = 0; q < b.q_size; ++q) out.push_back(Term::constant(q));
      continue;
    }
    if (b.allow_shift) {
      for (const auto& a : b.subscripts) {
        for (const Term& t : by_size[n - 1]) out.push_back(Term::shift(a, t));
      }
    }
    std::vector<std::vector<Term>> lists;
    std::vector<Term> cur;
    child_lists(by_size, n - 1, b.max_children, cur, [&](const std::vector<Term>& l) { lists.push_back(l); });
    for (std::uint32_t q = 0; q < b.q_size; ++q) {
      for (const auto& l : lists) out.push_back(Term::fq(q, l));
    }
    if (b.allow_ford) {
      for (const auto& a : b.subscripts) {
        for (const auto& l : lists) out.push_back(Term::ford(a, l));
      }
    }
  }
  std::vector<Term> all;
  for (auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
  return all;
}

std::vector<FinSpace> enumerate_posets(std::size_t n) {
  if (n > 5) throw Error(ErrorCode::kInvalidArgument, "poset enumeration is limited to 5 points");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<std::uint64_t, FinSpace>> found;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<bool> le(n * n, false);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((m >> k) & 1U) {
        le[pairs[k].first * n + pairs[k].second] = true;
        rel.push_back(pairs[k]);
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && le[i * n + j] && le[j * n + i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (i != k && le[i * n + j] && le[j * n + k] && !le[i * n + k]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::uint64_t key = 0;
    for (const auto& [i, j] : rel) key |= std::uint64_t{1} << (i * n + j);
    found.emplace_back(key, FinSpace::from_pairs(n, rel, names));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FinSpace> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<Ordinal> enumerate_ordinals(const std::vector<Ordinal>& exponents, std::size_t max_terms,
                                        std::uint64_t max_coeff) {
  std::vector<Ordinal> exps = exponents;
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return a > b; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal> out;
  std::function<void(std::size_t, std::size_t, const Ordinal&)> rec = [&](std::size_t from, std::size_t used,
                                                                          const Ordinal& acc) {
    out.push_back(acc);
    if (used == max_terms) return;
    for (std::size_t i = from; i < exps.size(); ++i) {
      for (std::uint64_t c = 1; c <= max_coeff; ++c) rec(i + 1, used + 1, acc + Ordinal::omega_pow(exps[i], c));
    }
  };
  rec(0, 0, Ordinal{});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qifh
