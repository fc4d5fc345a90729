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

#include "qifh/ltree.hpp"

#include <algorithm>
#include <charconv>

namespace qifh {

std::string address_to_string(const Address& a) {
  bool compact = true;
  for (auto i : a) compact = compact && i < 10;
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!compact && k > 0) out += '.';
    out += std::to_string(a[k]);
  }
  return out;
}

Address parse_address(std::string_view s) {
  Address a;
  if (s.empty() || s == "e" || s == "\xCE\xB5") return a;  // "", e, epsilon
  auto parse_index = [&](std::string_view part) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::kParse, "bad tree address '" + std::string(s) + "'");
    }
    return v;
  };
  if (s.find('.') == std::string_view::npos) {
    for (char c : s) a.push_back(parse_index(std::string_view(&c, 1)));
    return a;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = s.find('.', start);
    a.push_back(parse_index(s.substr(start, dot == std::string_view::npos ? s.npos : dot - start)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return a;
}

bool is_prefix(const Address& a, const Address& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace qifh
