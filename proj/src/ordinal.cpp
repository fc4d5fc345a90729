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

#include "qifh/ordinal.hpp"

#include <cctype>
#include <limits>

#include "qifh/error.hpp"

namespace qifh {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorCode::kInvalidArgument, "ordinal coefficient overflow");
  }
  return a + b;
}

template <class O>
std::strong_ordering cnf_compare(const O& a, const O& b) {
  const std::size_t n = std::min(a.term_count(), b.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
    if (auto c = a.coefficient(i) <=> b.coefficient(i); c != 0) return c;
  }
  return a.term_count() <=> b.term_count();
}

}  // namespace

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal r;
  if (n > 0) {
    r.exps_.emplace_back();
    r.coeffs_.push_back(n);
  }
  return r;
}

Ordinal Ordinal::omega() { return omega_pow(natural(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal r;
  if (coefficient > 0) {
    r.exps_.push_back(exponent);
    r.coeffs_.push_back(coefficient);
  }
  return r;
}

std::optional<std::uint64_t> Ordinal::as_natural() const {
  if (exps_.empty()) return 0;
  if (exps_.size() == 1 && exps_[0].is_zero()) return coeffs_[0];
  return std::nullopt;
}

bool Ordinal::is_successor() const { return !exps_.empty() && exps_.back().is_zero(); }

std::size_t Ordinal::height() const {
  std::size_t h = 0;
  for (const auto& e : exps_) {
    if (!e.is_zero()) h = std::max(h, e.height() + 1);
  }
  return h;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return cnf_compare(a, b); }

bool operator==(const Ordinal& a, const Ordinal& b) { return cnf_compare(a, b) == 0; }

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.exps_[0];
  Ordinal r;
  std::size_t i = 0;
  for (; i < a.exps_.size() && a.exps_[i] > lead; ++i) {
    r.exps_.push_back(a.exps_[i]);
    r.coeffs_.push_back(a.coeffs_[i]);
  }
  std::uint64_t carry = 0;
  if (i < a.exps_.size() && a.exps_[i] == lead) carry = a.coeffs_[i];
  for (std::size_t j = 0; j < b.exps_.size(); ++j) {
    r.exps_.push_back(b.exps_[j]);
    r.coeffs_.push_back(j == 0 ? checked_add(b.coeffs_[0], carry) : b.coeffs_[j]);
  }
  return r;
}

Ordinal ord_star(const Ordinal& a) {
  if (a.is_zero()) throw Error(ErrorCode::kZeroOrdinal, "the leading power of 0 is undefined");
  return Ordinal::omega_pow(a.exponent(0));
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (a > b) {
    throw Error(ErrorCode::kInvalidArgument, "left_subtract: " + to_string(a) + " > " + to_string(b));
  }
  std::size_t k = 0;
  while (k < a.exps_.size() && k < b.exps_.size() && a.exps_[k] == b.exps_[k] && a.coeffs_[k] == b.coeffs_[k]) ++k;
  Ordinal r;
  if (k == b.exps_.size()) return r;  // a == b
  std::size_t start = k;
  if (k < a.exps_.size() && a.exps_[k] == b.exps_[k]) {
    // Same exponent, larger coefficient in b; the rest of a is absorbed.
    r.exps_.push_back(b.exps_[k]);
    r.coeffs_.push_back(b.coeffs_[k] - a.coeffs_[k]);
    start = k + 1;
  }
  for (std::size_t j = start; j < b.exps_.size(); ++j) {
    r.exps_.push_back(b.exps_[j]);
    r.coeffs_.push_back(b.coeffs_[j]);
  }
  return r;
}

WadgeOrdinal::WadgeOrdinal(std::vector<WadgeOrdinal> exponents, std::vector<std::uint64_t> coefficients)
    : exps_(std::move(exponents)), coeffs_(std::move(coefficients)) {
  if (exps_.size() != coeffs_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "WadgeOrdinal: exponent/coefficient length mismatch");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (coeffs_[i] == 0) throw Error(ErrorCode::kInvalidArgument, "WadgeOrdinal: zero coefficient");
    if (i > 0 && !(exps_[i - 1] > exps_[i])) {
      throw Error(ErrorCode::kInvalidArgument, "WadgeOrdinal: exponents not strictly decreasing");
    }
  }
}

std::strong_ordering operator<=>(const WadgeOrdinal& a, const WadgeOrdinal& b) { return cnf_compare(a, b); }

bool operator==(const WadgeOrdinal& a, const WadgeOrdinal& b) { return cnf_compare(a, b) == 0; }

WadgeOrdinal f_map(const Ordinal& a) {
  std::vector<WadgeOrdinal> exps;
  std::vector<std::uint64_t> coeffs;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    exps.push_back(f_map(a.exponent(i)));
    coeffs.push_back(a.coefficient(i));
  }
  return WadgeOrdinal(std::move(exps), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse() {
    Ordinal r = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse,
                "ordinal literal '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Accepts "w" or UTF-8 omega (U+03C9).
  bool eat_omega() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'w') {
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, 2) == "\xCF\x89") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::uint64_t nat() {
    if (!peek_digit()) fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("natural number overflow");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Ordinal sum() {
    Ordinal r = prod();
    while (eat('+')) r = r + prod();
    return r;
  }

  Ordinal prod() {
    if (peek_digit()) return Ordinal::natural(nat());
    if (!eat_omega()) fail("expected 'w' or a natural number");
    Ordinal e = Ordinal::natural(1);
    if (eat('^')) e = atom();
    std::uint64_t c = 1;
    if (eat('*')) c = nat();
    return Ordinal::omega_pow(e, c);
  }

  Ordinal atom() {
    if (peek_digit()) return Ordinal::natural(nat());
    if (eat('(')) {
      Ordinal r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (!eat_omega()) fail("expected an exponent");
    Ordinal e = Ordinal::natural(1);
    if (eat('^')) e = atom();
    return Ordinal::omega_pow(e);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class O>
std::string render(const O& a, const char* base);

template <class O>
std::string render_atom(const O& a, const char* base) {
  if (a.term_count() == 0) return "0";
  if (a.term_count() == 1 && a.exponent(0).is_zero()) return std::to_string(a.coefficient(0));
  if (a.term_count() == 1 && a.coefficient(0) == 1) {
    const O& e = a.exponent(0);
    if (e.term_count() == 1 && e.exponent(0).is_zero() && e.coefficient(0) == 1) return base;
    return std::string(base) + "^" + render_atom(e, base);
  }
  return "(" + render(a, base) + ")";
}

template <class O>
std::string render(const O& a, const char* base) {
  if (a.term_count() == 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    if (i > 0) out += "+";
    const O& e = a.exponent(i);
    const std::uint64_t c = a.coefficient(i);
    if (e.is_zero()) {
      out += std::to_string(c);
      continue;
    }
    out += base;
    if (!(e.term_count() == 1 && e.exponent(0).is_zero() && e.coefficient(0) == 1)) {
      out += "^" + render_atom(e, base);
    }
    if (c > 1) out += "*" + std::to_string(c);
  }
  return out;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

std::string to_string(const Ordinal& a) { return render(a, "w"); }

std::string to_string(const WadgeOrdinal& a) { return render(a, "w1"); }

}  // namespace qifh
