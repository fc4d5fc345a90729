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

#include "qifh/error.hpp"
#include "qifh/term.hpp"

namespace qifh {

bool TermOrder::q_leq(std::uint32_t a, std::uint32_t b) const {
  if (!q_.contains(a) || !q_.contains(b)) {
    throw Error(ErrorCode::kInvalidArgument, "term constant outside Q");
  }
  return q_.leq(a, b);
}

bool TermOrder::leq(const Term& u, const Term& v) {
  const std::uint64_t key = (static_cast<std::uint64_t>(u.id()) << 32) | v.id();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool r = compute(u, v);
  if (memo_.size() >= memo_limit_) memo_.clear();
  memo_.emplace(key, r);
  return r;
}

// Case analysis on the outermost symbols of u and v. Where the defining
// clauses for F_q / F_alpha on the left mention a stray symbol (F_p in the
// F_q-vs-F_beta case, q or F_q in place of the right-hand term r in the
// F_alpha-vs-r and F_alpha-vs-F_r cases) the right-hand term is used; the
// homomorphism oracle on T(u), T(v) confirms this reading.
bool TermOrder::compute(const Term& u, const Term& v) {
  auto some_child = [&](const Term& lhs, const Term& rhs, std::size_t from) {
    auto kids = rhs.children();
    for (std::size_t i = from; i < kids.size(); ++i) {
      if (leq(lhs, kids[i])) return true;
    }
    return false;
  };
  auto all_children = [&](const Term& lhs, std::size_t from, const Term& rhs) {
    auto kids = lhs.children();
    for (std::size_t i = from; i < kids.size(); ++i) {
      if (!leq(kids[i], rhs)) return false;
    }
    return true;
  };

  switch (u.kind()) {
    case TermKind::kConst:
      switch (v.kind()) {
        case TermKind::kConst:
          return q_leq(u.label(), v.label());
        case TermKind::kShift:
          return leq(u, v.body());
        case TermKind::kFQ:
          return q_leq(u.label(), v.label()) || some_child(u, v, 0);
        case TermKind::kFOrd:
          return some_child(u, v, 0);
      }
      break;

    case TermKind::kShift:
      switch (v.kind()) {
        case TermKind::kConst:
          return leq(u.body(), v);
        case TermKind::kShift: {
          const auto c = u.subscript() <=> v.subscript();
          if (c < 0) return leq(u.body(), v);
          if (c == 0) return leq(u.body(), v.body());
          return leq(u, v.body());
        }
        case TermKind::kFQ:
          return leq(u, Term::constant(v.label())) || some_child(u, v, 0);
        case TermKind::kFOrd:
          return leq(u, v.head()) || some_child(u, v, 1);
      }
      break;

    case TermKind::kFQ: {
      const Term q = Term::constant(u.label());
      switch (v.kind()) {
        case TermKind::kConst:
          return q_leq(u.label(), v.label()) && all_children(u, 0, v);
        case TermKind::kShift:
          return leq(q, v) && all_children(u, 0, v);
        case TermKind::kFQ:
          return (q_leq(u.label(), v.label()) && all_children(u, 0, v)) || some_child(u, v, 0);
        case TermKind::kFOrd:
          return (leq(q, v.head()) && all_children(u, 0, v)) || some_child(u, v, 1);
      }
      break;
    }

    case TermKind::kFOrd:
      switch (v.kind()) {
        case TermKind::kConst:
        case TermKind::kShift:
          return leq(u.head(), v) && all_children(u, 1, v);
        case TermKind::kFQ:
          return (leq(u.head(), Term::constant(v.label())) && all_children(u, 1, v)) || some_child(u, v, 0);
        case TermKind::kFOrd:
          return (leq(u.head(), v.head()) && all_children(u, 1, v)) || some_child(u, v, 1);
      }
      break;
  }
  return false;
}

}  // namespace qifh
