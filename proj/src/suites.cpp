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

#include "qifh/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "qifh/enumerate.hpp"
#include "qifh/hierarchy.hpp"
#include "qifh/ordinal.hpp"
#include "qifh/space.hpp"

namespace qifh {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a[k] & ~b[k]) != 0) return false;
  }
  return true;
}

std::vector<FinSpace> posets_upto(std::size_t n) {
  std::vector<FinSpace> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto v = enumerate_posets(k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<Ordinal> subscripts(const SuiteConfig& cfg) {
  std::vector<Ordinal> s;
  for (std::uint64_t a = 0; a <= cfg.max_subscript; ++a) s.push_back(Ordinal::natural(a));
  return s;
}

std::vector<Term> terms_for(const SuiteConfig& cfg, std::size_t q) {
  TermBounds b;
  b.max_nodes = cfg.max_nodes;
  b.q_size = q;
  b.subscripts = subscripts(cfg);
  b.max_children = cfg.max_children;
  return enumerate_terms(b);
}

std::string space_str(const FinSpace& x) { return space_to_json(x).dump(); }

std::string values_str(const std::vector<std::uint32_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += v[i] == kNoLabel ? std::string("-") : std::to_string(v[i]);
  }
  return s + "]";
}

// Index of a labeling in the order of all_labelings (first point most
// significant).
std::size_t labeling_index(const std::vector<std::uint32_t>& v, std::size_t q) {
  std::size_t idx = 0;
  for (auto x : v) idx = idx * q + x;
  return idx;
}

// Level sets of every term over the Borel base, as bitsets over labelings.
struct LevelTable {
  std::vector<std::vector<std::uint32_t>> labelings;
  std::vector<Bits> sets;
};

LevelTable level_table(const FinSpace& x, std::size_t q, const std::vector<Term>& terms) {
  LevelTable t;
  const Base base = base_borel(x);
  t.labelings = all_labelings(base, q);
  t.sets.reserve(terms.size());
  for (const Term& u : terms) {
    Bits b = make_bits(t.labelings.size());
    for (std::size_t i = 0; i < t.labelings.size(); ++i) {
      if (member(t.labelings[i], u, base)) set_bit(b, i);
    }
    t.sets.push_back(std::move(b));
  }
  return t;
}

// Relation matrix rows: row[i] has bit j iff terms[i] <| terms[j].
std::vector<Bits> leq_matrix(const Quasiorder& q, const std::vector<Term>& terms) {
  TermOrder ord(q);
  std::vector<Bits> rows(terms.size(), make_bits(terms.size()));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (ord.leq(terms[i], terms[j])) set_bit(rows[i], j);
    }
  }
  return rows;
}

std::string qo_str(const Quasiorder& q) {
  return (qo_is_antichain(q) ? "antichain(" : "qo(") + std::to_string(q.size()) + ")";
}

// ---------------------------------------------------------------------------

void suite_qo_axioms(const SuiteConfig& cfg, SuiteReport& r) {
  const std::size_t k = std::min<std::size_t>(cfg.max_q, 2);
  std::vector<Quasiorder> qs{Quasiorder::antichain(k)};
  if (k >= 2) qs.push_back(Quasiorder::chain(k));
  std::mt19937_64 rng(cfg.seed);
  for (const auto& q : qs) {
    const auto terms = terms_for(cfg, q.size());
    const auto rows = leq_matrix(q, terms);
    const std::size_t n = terms.size();
    r.count("terms", n);
    for (std::size_t i = 0; i < n; ++i) {
      ++r.checked;
      r.count("reflexivity");
      if (!test_bit(rows[i], i)) r.violation(qo_str(q) + " not reflexive at " + to_string(terms[i]));
    }
    // Exhaustive transitivity on the matrix: u <| v implies up(v) inside up(u).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !test_bit(rows[i], j)) continue;
        ++r.checked;
        r.count("transitivity-pairs");
        if (!bits_subset(rows[j], rows[i])) {
          std::size_t w = 0;
          while (!(test_bit(rows[j], w) && !test_bit(rows[i], w))) ++w;
          r.violation(qo_str(q) + " not transitive: " + to_string(terms[i]) + " <| " + to_string(terms[j]) + " <| " +
                      to_string(terms[w]));
        }
      }
    }
    // Sampled triples recomputed by a fresh order: half uniform, half drawn
    // along the relation so the premise holds.
    TermOrder fresh(q);
    std::vector<std::vector<std::size_t>> up(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (test_bit(rows[i], j)) up[i].push_back(j);
      }
    }
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
      std::size_t a = rng() % n, b = 0, c = 0;
      if (s % 2 == 0) {
        b = rng() % n;
        c = rng() % n;
      } else {
        b = up[a][rng() % up[a].size()];
        c = up[b][rng() % up[b].size()];
      }
      ++r.checked;
      r.count("sampled-triples");
      if (fresh.leq(terms[a], terms[b]) && fresh.leq(terms[b], terms[c])) {
        r.count("sampled-premise-held");
        if (!fresh.leq(terms[a], terms[c])) {
          r.violation(qo_str(q) + " sampled triple not transitive: " + to_string(terms[a]) + ", " +
                      to_string(terms[b]) + ", " + to_string(terms[c]));
        }
      }
    }
  }
}

void suite_hom_oracle(const SuiteConfig& cfg, SuiteReport& r) {
  const std::size_t k = std::min<std::size_t>(cfg.max_q, 2);
  std::vector<Quasiorder> qs{Quasiorder::antichain(k)};
  if (k >= 2) qs.push_back(Quasiorder::chain(k));
  for (const auto& q : qs) {
    const auto terms = terms_for(cfg, q.size());
    TermOrder ord(q);
    TreeOracle oracle(q);
    for (const Term& u : terms) {
      for (const Term& v : terms) {
        ++r.checked;
        const bool a = ord.leq(u, v);
        const bool b = oracle.leq(u, v);
        if (a) r.count("related-" + qo_str(q));
        if (a != b) {
          r.violation(qo_str(q) + " " + to_string(u) + " vs " + to_string(v) + ": term_leq=" + (a ? "true" : "false") +
                      " hom_leq=" + (b ? "true" : "false"));
        }
      }
    }
  }
}

void suite_inclusion(const SuiteConfig& cfg, SuiteReport& r) {
  const auto spaces = posets_upto(cfg.max_points);
  for (std::size_t k = 2; k <= cfg.max_q; ++k) {
    const Quasiorder q = Quasiorder::antichain(k);
    const auto terms = terms_for(cfg, k);
    const auto rows = leq_matrix(q, terms);
    std::uint64_t related = 0;
    for (const auto& row : rows) {
      for (auto w : row) related += static_cast<std::uint64_t>(std::popcount(w));
    }
    r.count("related-pairs-q" + std::to_string(k), related);
    for (const FinSpace& x : spaces) {
      const LevelTable t = level_table(x, k, terms);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = 0; j < terms.size(); ++j) {
          if (!test_bit(rows[i], j)) continue;
          ++r.checked;
          if (!bits_subset(t.sets[i], t.sets[j])) {
            std::size_t a = 0;
            while (!(test_bit(t.sets[i], a) && !test_bit(t.sets[j], a))) ++a;
            r.violation("X=" + space_str(x) + " Q=" + qo_str(q) + " u=" + to_string(terms[i]) +
                        " v=" + to_string(terms[j]) + " A=" + values_str(t.labelings[a]));
          }
        }
      }
    }
  }
}

void suite_shift_law(const SuiteConfig& cfg, SuiteReport& r) {
  const auto spaces = posets_upto(cfg.max_points);
  const auto alphas = subscripts(cfg);
  for (std::size_t k = 2; k <= cfg.max_q; ++k) {
    const auto terms = terms_for(cfg, k);
    for (const FinSpace& x : spaces) {
      const Base borel = base_borel(x);
      for (const Ordinal& a : alphas) {
        const Base shifted = base_shift(borel, Ordinal::omega_pow(a));
        for (const Term& u : terms) {
          const Term su = Term::shift(a, u);
          ++r.checked;
          const auto lhs = level_set(borel, k, su);
          const auto rhs = level_set(shifted, k, u);
          if (lhs != rhs) {
            r.violation("X=" + space_str(x) + " q=" + std::to_string(k) + " u=" + to_string(u) + " alpha=" +
                        to_string(a) + ": |L(s(u))|=" + std::to_string(lhs.size()) +
                        " |L^shift(u)|=" + std::to_string(rhs.size()));
            continue;
          }
          if (k != 2) continue;
          // Enumerated families on both sides, where affordable.
          if (count_families(su, borel, cfg.family_budget + 1) > cfg.family_budget ||
              count_families(u, shifted, cfg.family_budget + 1) > cfg.family_budget) {
            r.count("enum-skipped");
            continue;
          }
          r.count("enum-compared");
          const auto le = level_set_enum(borel, k, su, cfg.family_budget);
          const auto re = level_set_enum(shifted, k, u, cfg.family_budget);
          if (le != lhs || re != rhs) {
            r.violation("X=" + space_str(x) + " q=2 u=" + to_string(u) + " alpha=" + to_string(a) +
                        ": enumerated level sets disagree with member");
          }
        }
      }
    }
  }
}

void suite_wadge_closure(const SuiteConfig& cfg, SuiteReport& r) {
  const auto spaces = posets_upto(cfg.max_points);
  for (std::size_t k = 2; k <= cfg.max_q; ++k) {
    const Quasiorder q = Quasiorder::antichain(k);
    const auto terms = terms_for(cfg, k);
    for (const FinSpace& x : spaces) {
      const LevelTable t = level_table(x, k, terms);
      const std::size_t m = t.labelings.size();
      // below[a] = labelings Wadge-reducible to a.
      std::vector<Bits> below(m, make_bits(m));
      for (std::size_t a = 0; a < m; ++a) {
        const QPartition pa{x, q, t.labelings[a]};
        for (std::size_t b = 0; b < m; ++b) {
          if (wadge_leq(QPartition{x, q, t.labelings[b]}, pa)) set_bit(below[a], b);
        }
      }
      for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t a = 0; a < m; ++a) {
          if (!test_bit(t.sets[i], a)) continue;
          ++r.checked;
          if (!bits_subset(below[a], t.sets[i])) {
            std::size_t b = 0;
            while (!(test_bit(below[a], b) && !test_bit(t.sets[i], b))) ++b;
            r.violation("X=" + space_str(x) + " Q=" + qo_str(q) + " u=" + to_string(terms[i]) + " A=" +
                        values_str(t.labelings[a]) + " B=" + values_str(t.labelings[b]) + " B<=_W A but B not in level");
          }
        }
      }
    }
  }
}

void check_catq_laws(const ContMap& f, SuiteReport& r) {
  const FinSpace& x = f.source();
  const FinSpace& y = f.target();
  const std::string tag = "f=" + map_to_json(f).dump();
  auto law = [&](bool ok, const std::string& what) {
    ++r.checked;
    r.count("catq-laws");
    if (!ok) r.violation(tag + ": " + what);
  };
  law(cat_quantifier(f, 0) == 0, "f[empty] is not empty");
  law(cat_quantifier(f, x.points()) == y.points(), "f[X] is not Y");
  const PointSet all = x.points();
  for (PointSet a = 0;; a = (a - all) & all) {
    const PointSet fa = cat_quantifier(f, a);
    law(subset_of(fa, f.image(a)), "f[A] not inside f(A) for A=" + set_to_string(x, a));
    if (x.is_open(a)) law(y.is_open(fa), "f[U] not open for U=" + set_to_string(x, a));
    for (PointSet b = a;; b = (b - all) & all) {
      law(cat_quantifier(f, a | b) == (fa | cat_quantifier(f, b)),
          "f[A u B] differs for A=" + set_to_string(x, a) + " B=" + set_to_string(x, b));
      if (b == all) break;
    }
    if (a == all) break;
  }
  for (std::size_t p = 0; p < y.size(); ++p) {
    const PointSet fib = f.fiber(p);
    law(!is_meager_in(x, fib, fib), "fiber over " + y.name(p) + " is meager in itself");
  }
}

// Continuous open surjections from posets with <= max_points points onto posets
// with <= 2 points, plus the projection S x D2 -> S.
std::vector<ContMap> preservation_maps(const SuiteConfig& cfg) {
  const auto sources = posets_upto(cfg.max_points);
  const auto targets = posets_upto(std::min<std::size_t>(cfg.max_points, 2));
  std::vector<ContMap> maps;
  for (const auto& x : sources) {
    for (const auto& y : targets) {
      for (auto& f : enum_cos(x, y)) maps.push_back(std::move(f));
    }
  }
  const FinSpace s = FinSpace::sierpinski();
  const FinSpace sd = FinSpace::product(s, FinSpace::discrete(2));
  {
    std::vector<std::uint32_t> proj;
    for (std::size_t i = 0; i < sd.size(); ++i) proj.push_back(static_cast<std::uint32_t>(i / 2));
    maps.emplace_back(sd, s, proj);
  }
  return maps;
}

void suite_catq_laws(const SuiteConfig& cfg, SuiteReport& r) {
  const auto maps = preservation_maps(cfg);
  r.count("maps", maps.size());
  for (const auto& f : maps) check_catq_laws(f, r);
}

void suite_preservation(const SuiteConfig& cfg, SuiteReport& r) {
  const auto maps = preservation_maps(cfg);
  r.count("maps", maps.size());
  for (std::size_t k = 1; k <= cfg.max_q; ++k) {
    const auto terms = terms_for(cfg, k);
    // Level tables per distinct space, shared by all maps.
    std::vector<std::pair<FinSpace, LevelTable>> cache;
    auto table = [&](const FinSpace& x) -> const LevelTable& {
      for (const auto& [sp, t] : cache) {
        if (sp == x && sp.names() == x.names()) return t;
      }
      cache.emplace_back(x, level_table(x, k, terms));
      return cache.back().second;
    };
    for (const auto& f : maps) {
      const LevelTable& ty = table(f.target());
      const bool small = f.source().size() <= cfg.max_points;
      const LevelTable* tx = small ? &table(f.source()) : nullptr;
      const Base bx = base_borel(f.source());
      for (std::size_t ti = 0; ti < terms.size(); ++ti) {
        for (std::size_t a = 0; a < ty.labelings.size(); ++a) {
          std::vector<std::uint32_t> af(f.source().size());
          for (std::size_t p = 0; p < af.size(); ++p) af[p] = ty.labelings[a][f(p)];
          const bool in_y = test_bit(ty.sets[ti], a);
          const bool in_x = tx ? test_bit(tx->sets[ti], labeling_index(af, k)) : member(af, terms[ti], bx);
          ++r.checked;
          if (in_x != in_y) {
            r.violation("f=" + map_to_json(f).dump() + " q=" + std::to_string(k) + " u=" + to_string(terms[ti]) +
                        " A=" + values_str(ty.labelings[a]) + ": A o f " + (in_x ? "in" : "not in") + " L(X,u), A " +
                        (in_y ? "in" : "not in") + " L(Y,u)");
          }
        }
      }
    }
  }
}

void suite_reduct(const SuiteConfig& cfg, SuiteReport& r) {
  const auto spaces = posets_upto(cfg.max_points);
  struct Instance {
    const FinSpace* x;
    std::size_t q;
    Term u;
    std::uint64_t families;
  };
  std::vector<std::vector<Term>> terms(cfg.max_q + 1);
  std::vector<Instance> inst;
  std::uint64_t total = 0;
  for (std::size_t k = 2; k <= cfg.max_q; ++k) {
    terms[k] = terms_for(cfg, k);
    for (const auto& x : spaces) {
      const Base b = base_borel(x);
      for (const Term& u : terms[k]) {
        const std::uint64_t c = count_families(u, b, cfg.family_budget + 1);
        if (c > cfg.family_budget) {
          r.count("instances-over-budget");
          continue;
        }
        inst.push_back({&x, k, u, c});
        total += c;
      }
    }
  }
  r.count("families-available", total);
  // Seeded thinning once the family space exceeds the sample budget.
  std::mt19937_64 rng(cfg.seed);
  const double rate = total <= cfg.samples ? 1.0 : static_cast<double>(cfg.samples) / static_cast<double>(total);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const auto& in : inst) {
    const Base b = base_borel(*in.x);
    enumerate_families(in.u, b, cfg.family_budget, [&](const UFamily& f) {
      if (rate < 1.0 && coin(rng) >= rate) return true;
      const Evaluation ev = family_eval_unchecked(f, b);
      r.count("families-examined");
      if (ev.determined()) r.count("families-determining");
      if (is_reduced_family(f) && !ev.determined()) {
        r.violation("X=" + space_str(*in.x) + " family " + family_to_json(f, *in.x).dump() +
                    " is reduced but undetermined");
      }
      UFamily red;
      try {
        red = family_reduct(f, b);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoReduct) throw;
        ++r.skipped;
        r.count("no-reduct");
        return true;
      }
      ++r.checked;
      const Evaluation er = family_eval(red, b);
      std::string problem;
      if (!is_reduced_family(red)) problem = "reduct is not reduced";
      else if (!er.determined()) problem = "reduct is undetermined";
      else if (ev.determined() && er.values != ev.values) problem = "reduct determines a different partition";
      if (ev.determined() && problem.empty()) r.count("determining-reducts-agree");
      if (!problem.empty()) {
        r.violation("X=" + space_str(*in.x) + " family " + family_to_json(f, *in.x).dump() + ": " + problem);
      }
      return true;
    });
  }
}

void suite_hk(const SuiteConfig& cfg, SuiteReport& r) {
  const auto spaces = posets_upto(cfg.max_points);
  for (std::size_t k = 2; k <= cfg.max_q; ++k) {
    TermBounds tb;
    tb.max_nodes = cfg.hk_max_nodes;
    tb.q_size = k;
    tb.max_children = cfg.hk_max_nodes;
    tb.allow_shift = false;
    tb.allow_ford = false;
    tb.subscripts.clear();
    const auto terms = enumerate_terms(tb);
    r.count("witness-terms-q" + std::to_string(k), terms.size());
    const Quasiorder q = Quasiorder::antichain(k);
    for (const auto& x : spaces) {
      const Base b = base_borel(x);
      for (const auto& a : all_labelings(b, k)) {
        ++r.checked;
        std::optional<Term> witness;
        for (const Term& u : terms) {
          if (member(a, u, b)) {
            witness = u;
            break;
          }
        }
        if (!witness) {
          r.violation("X=" + space_str(x) + " q=" + std::to_string(k) + " A=" + values_str(a) + " has no witness");
          continue;
        }
        r.count("witnessed");
        r.details.push_back("X=" + space_str(x) + " q=" + std::to_string(k) + " A=" + values_str(a) +
                            " witness=" + to_string(*witness));
        // Confirm the witness by exhibiting a determining family.
        const QPartition pa{x, q, a};
        try {
          if (member_enum(pa, *witness, b, cfg.family_budget)) {
            r.count("witness-confirmed-by-enumeration");
          } else {
            r.violation("X=" + space_str(x) + " A=" + values_str(a) + " witness " + to_string(*witness) +
                        " not confirmed by family enumeration");
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kBudgetExceeded) throw;
          r.count("witness-enumeration-over-budget");
        }
      }
    }
  }
}

void suite_meager_oracle(const SuiteConfig& cfg, SuiteReport& r) {
  for (const auto& x : posets_upto(cfg.max_points)) {
    const PointSet all = x.points();
    for (PointSet a = 0;; a = (a - all) & all) {
      ++r.checked;
      const bool fast = is_meager(x, a);
      const bool slow = is_meager_by_decomposition(x, a);
      if (fast) r.count("meager-sets");
      if (fast != slow) {
        r.violation("X=" + space_str(x) + " A=" + set_to_string(x, a) + ": criterion=" + (fast ? "meager" : "non-meager") +
                    " decomposition=" + (slow ? "meager" : "non-meager"));
      }
      if (a == all) break;
    }
  }
}

void suite_fmap(const SuiteConfig&, SuiteReport& r) {
  auto spot = [&](const Ordinal& a, const std::string& expected) {
    ++r.checked;
    r.count("spot-values");
    const std::string got = to_string(f_map(a));
    if (got != expected) r.violation("f(" + to_string(a) + ") = " + got + ", expected " + expected);
  };
  spot(Ordinal{}, "0");
  for (std::uint64_t n = 1; n < 50; ++n) spot(Ordinal::natural(n), std::to_string(n));
  spot(Ordinal::omega(), "w1");
  spot(Ordinal::omega_pow(Ordinal::omega()), "w1^w1");
  const Ordinal w = Ordinal::omega();
  const std::vector<Ordinal> exps{Ordinal{},
                                  Ordinal::natural(1),
                                  Ordinal::natural(2),
                                  w,
                                  w + Ordinal::natural(1),
                                  w + w,
                                  Ordinal::omega_pow(Ordinal::natural(2))};
  const auto ords = enumerate_ordinals(exps, 3, 2);
  r.count("ordinals", ords.size());
  std::vector<WadgeOrdinal> images;
  images.reserve(ords.size());
  for (const auto& a : ords) images.push_back(f_map(a));
  for (std::size_t i = 0; i + 1 < ords.size(); ++i) {
    for (std::size_t j = i + 1; j < ords.size(); ++j) {
      ++r.checked;
      if (!(images[i] < images[j])) {
        r.violation("f not strictly monotone: " + to_string(ords[i]) + " < " + to_string(ords[j]) + " but f gives " +
                    to_string(images[i]) + ", " + to_string(images[j]));
      }
    }
  }
}

void suite_member_oracle(const SuiteConfig& cfg, SuiteReport& r) {
  auto spaces = posets_upto(cfg.max_points);
  // The source of the projection used by the preservation suite.
  if (cfg.max_points >= 3) spaces.push_back(FinSpace::product(FinSpace::sierpinski(), FinSpace::discrete(2)));
  for (std::size_t k = 2; k <= cfg.max_q; ++k) {
    const auto terms = terms_for(cfg, k);
    for (const auto& x : spaces) {
      const Base b = base_borel(x);
      for (const Term& u : terms) {
        if (count_families(u, b, cfg.family_budget + 1) > cfg.family_budget) {
          ++r.skipped;
          continue;
        }
        ++r.checked;
        const auto fast = level_set(b, k, u);
        const auto slow = level_set_enum(b, k, u, cfg.family_budget);
        r.count("partitions-compared", all_labelings(b, k).size());
        if (fast != slow) {
          r.violation("X=" + space_str(x) + " q=" + std::to_string(k) + " u=" + to_string(u) + ": member gives " +
                      std::to_string(fast.size()) + " partitions, enumeration " + std::to_string(slow.size()));
        }
        const auto red = level_set(b, k, u, MemberOptions{true});
        if (level_has_reduction(b.steps().front().level)) {
          r.count("reduced-compared");
          if (red != fast) {
            r.violation("X=" + space_str(x) + " q=" + std::to_string(k) + " u=" + to_string(u) +
                        ": reduced families give a different level set");
          }
        }
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteConfig&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"qo-axioms", suite_qo_axioms},       {"hom-oracle", suite_hom_oracle},
      {"inclusion", suite_inclusion},       {"shift-law", suite_shift_law},
      {"wadge-closure", suite_wadge_closure}, {"preservation", suite_preservation},
      {"reduct", suite_reduct},             {"hk", suite_hk},
      {"meager-oracle", suite_meager_oracle}, {"fmap", suite_fmap},
      {"member-oracle", suite_member_oracle}, {"catq-laws", suite_catq_laws},
  };
  return r;
}

}  // namespace

void SuiteReport::count(const std::string& key, std::uint64_t by) {
  for (auto& [k, v] : counters) {
    if (k == key) {
      v += by;
      return;
    }
  }
  counters.emplace_back(key, by);
}

void SuiteReport::violation(const std::string& text) {
  ++violations;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(text);
}

std::string SuiteReport::to_text(const SuiteConfig& cfg) const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "config: max-nodes=" << cfg.max_nodes << " max-subscript=" << cfg.max_subscript
     << " max-points=" << cfg.max_points << " max-q=" << cfg.max_q << " max-children=" << cfg.max_children
     << " seed=" << cfg.seed << " samples=" << cfg.samples << " family-budget=" << cfg.family_budget << "\n";
  os << "checked: " << checked << "\n";
  os << "skipped: " << skipped << "\n";
  for (const auto& [k, v] : counters) os << "  " << k << ": " << v << "\n";
  os << "violations: " << violations << "\n";
  for (const auto& c : counterexamples) os << "counterexample: " << c << "\n";
  os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json SuiteReport::to_json(const SuiteConfig& cfg) const {
  Json c = Json::object();
  for (const auto& [k, v] : counters) c[k] = v;
  return Json{{"suite", suite},
              {"config",
               {{"max_nodes", cfg.max_nodes},
                {"max_subscript", cfg.max_subscript},
                {"max_points", cfg.max_points},
                {"max_q", cfg.max_q},
                {"max_children", cfg.max_children},
                {"seed", cfg.seed},
                {"samples", cfg.samples},
                {"family_budget", cfg.family_budget}}},
              {"checked", checked},
              {"skipped", skipped},
              {"violations", violations},
              {"counters", c},
              {"counterexamples", counterexamples},
              {"details", details},
              {"result", passed() ? "PASS" : "FAIL"}};
}

SuiteConfig default_suite_config(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  if (suite == "meager-oracle") cfg.max_points = 4;
  if (suite == "qo-axioms" || suite == "hom-oracle") cfg.max_q = 2;
  return cfg;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, fn] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  for (const auto& [name, fn] : registry()) {
    if (name != cfg.suite) continue;
    if (cfg.max_nodes == 0 || cfg.max_points == 0 || cfg.max_q == 0 || cfg.max_children == 0 ||
        cfg.hk_max_nodes == 0 || cfg.family_budget == 0) {
      throw Error(ErrorCode::kInvalidArgument, "suite bounds must be positive");
    }
    SuiteReport r;
    r.suite = name;
    fn(cfg, r);
    return r;
  }
  throw Error(ErrorCode::kUnknownSuite, "unknown suite \"" + cfg.suite + "\"");
}

bool TreeOracle::leq(const Term& u, const Term& v) {
  const std::uint64_t key = (std::uint64_t{u.id()} << 32) | v.id();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool u_label = u.is_const() || u.is_s_term();
  const bool v_label = v.is_const() || v.is_s_term();
  bool r = false;
  if (u_label && v_label) {
    r = label_leq(u, v);
  } else {
    r = hom_leq(term_tree(u), term_tree(v), [this](const Term& a, const Term& b) { return label_leq(a, b); });
  }
  memo_.emplace(key, r);
  return r;
}

bool TreeOracle::label_leq(const Term& a, const Term& b) {
  if (a.is_const() && b.is_const()) {
    if (!q_.contains(a.label()) || !q_.contains(b.label())) throw Error(ErrorCode::kInvalidArgument, "constant outside Q");
    return q_.leq(a.label(), b.label());
  }
  if (a.is_const()) return leq(a, b.body());
  if (b.is_const()) return leq(a.body(), b);
  const auto c = a.subscript() <=> b.subscript();
  if (c < 0) return leq(a.body(), b);
  if (c == 0) return leq(a.body(), b.body());
  return leq(a, b.body());
}

}  // namespace qifh
