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

#include "qifh/qifh.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qifh/hierarchy.hpp"
#include "qifh/io.hpp"
#include "qifh/suites.hpp"

struct qifh_qo {
  qifh::Quasiorder q;
};
struct qifh_term {
  qifh::Term t;
};
struct qifh_space {
  qifh::FinSpace x;
};
struct qifh_base {
  qifh::Base b;
};

namespace {

using qifh::Error;
using qifh::ErrorCode;
using qifh::Json;

thread_local std::string g_last_error;

struct NullArgument {};

int fail(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, mapping exceptions to status codes.
template <class F>
int guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return QIFH_OK;
  } catch (const NullArgument&) {
    return fail(QIFH_E_NULL_POINTER, "null pointer argument");
  } catch (const Error& e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(QIFH_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QIFH_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QIFH_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p) {
  if (p == nullptr) throw NullArgument{};
}

Json parse(const char* text) {
  need(text);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

// Accepts a bare name ("S", "borel") as well as a JSON document.
Json parse_loose(const char* text) {
  need(text);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    return Json(std::string(text));
  }
}

qifh::QPartition partition_of(const qifh::FinSpace& x, const qifh::Quasiorder& q, const char* json) {
  return qifh::partition_from_json(parse(json), x, q);
}

void set_u64(const Json& j, const char* key, std::uint64_t& out) {
  if (j.contains(key)) out = j.at(key).get<std::uint64_t>();
}
void set_size(const Json& j, const char* key, std::size_t& out) {
  if (j.contains(key)) out = j.at(key).get<std::size_t>();
}

}  // namespace

extern "C" {

const char* qifh_last_error(void) { return g_last_error.c_str(); }

const char* qifh_status_name(int status) {
  switch (status) {
    case QIFH_OK: return "Ok";
    case QIFH_E_NULL_POINTER: return "NullPointer";
    case QIFH_E_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= QIFH_E_PARSE && status <= QIFH_E_BUDGET_EXCEEDED) {
    return qifh::error_code_name(static_cast<ErrorCode>(status));
  }
  return "Unknown";
}

const char* qifh_version(void) { return "1.0.0"; }

void qifh_free_string(char* s) { std::free(s); }

int qifh_ord_normalize(const char* ord, char** out) {
  return guarded([&] {
    need(ord), need(out);
    *out = dup(qifh::to_string(qifh::parse_ordinal(ord)));
  });
}

int qifh_ord_compare(const char* a, const char* b, int* out) {
  return guarded([&] {
    need(a), need(b), need(out);
    const auto c = qifh::parse_ordinal(a) <=> qifh::parse_ordinal(b);
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

int qifh_ord_add(const char* a, const char* b, char** out) {
  return guarded([&] {
    need(a), need(b), need(out);
    *out = dup(qifh::to_string(qifh::parse_ordinal(a) + qifh::parse_ordinal(b)));
  });
}

int qifh_ord_star(const char* a, char** out) {
  return guarded([&] {
    need(a), need(out);
    *out = dup(qifh::to_string(qifh::ord_star(qifh::parse_ordinal(a))));
  });
}

int qifh_fmap(const char* a, char** out) {
  return guarded([&] {
    need(a), need(out);
    *out = dup(qifh::to_string(qifh::f_map(qifh::parse_ordinal(a))));
  });
}

int qifh_qo_from_json(const char* json, qifh_qo** out) {
  return guarded([&] {
    need(out);
    *out = new qifh_qo{qifh::qo_from_json(parse(json))};
  });
}

int qifh_qo_antichain(size_t size, qifh_qo** out) {
  return guarded([&] {
    need(out);
    *out = new qifh_qo{qifh::Quasiorder::antichain(size)};
  });
}

int qifh_qo_chain(size_t size, qifh_qo** out) {
  return guarded([&] {
    need(out);
    *out = new qifh_qo{qifh::Quasiorder::chain(size)};
  });
}

void qifh_qo_free(qifh_qo* q) { delete q; }

size_t qifh_qo_size(const qifh_qo* q) { return q == nullptr ? 0 : q->q.size(); }

int qifh_qo_automorphisms(const qifh_qo* q, char** json_out) {
  return guarded([&] {
    need(q), need(json_out);
    Json j = qifh::qo_automorphisms(q->q);
    *json_out = dup(j.dump());
  });
}

int qifh_term_parse(const char* text, qifh_term** out) {
  return guarded([&] {
    need(text), need(out);
    *out = new qifh_term{qifh::parse_term(text)};
  });
}

void qifh_term_free(qifh_term* u) { delete u; }

int qifh_term_to_string(const qifh_term* u, char** out) {
  return guarded([&] {
    need(u), need(out);
    *out = dup(qifh::to_string(u->t));
  });
}

int qifh_term_validate(const qifh_term* u, size_t q_size, const char* gamma) {
  return guarded([&] {
    need(u);
    std::optional<qifh::Ordinal> g;
    if (gamma != nullptr) g = qifh::parse_ordinal(gamma);
    qifh::validate_term(u->t, q_size, g);
  });
}

int qifh_term_rank(const qifh_term* u, size_t* out) {
  return guarded([&] {
    need(u), need(out);
    *out = qifh::term_rank(u->t);
  });
}

int qifh_term_decompose(const qifh_term* u, char** json_out) {
  return guarded([&] {
    need(u), need(json_out);
    const auto d = qifh::term_decompose(u->t);
    Json chain = Json::array();
    for (const auto& a : qifh::term_shift_chain(u->t)) chain.push_back(qifh::to_string(a));
    Json j{{"shift", qifh::to_string(d.shift)}, {"core", qifh::to_string(d.core)}, {"chain", chain},
           {"singleton", u->t.is_singleton()}};
    if (u->t.is_singleton()) j["value"] = u->t.singleton_value();
    *json_out = dup(j.dump());
  });
}

int qifh_term_tree(const qifh_term* u, char** json_out) {
  return guarded([&] {
    need(u), need(json_out);
    *json_out = dup(qifh::term_tree_to_json(u->t).dump());
  });
}

int qifh_term_tree_dot(const qifh_term* u, char** dot_out) {
  return guarded([&] {
    need(u), need(dot_out);
    *dot_out = dup(qifh::term_tree_dot(u->t));
  });
}

int qifh_term_syntax_dot(const qifh_term* u, char** dot_out) {
  return guarded([&] {
    need(u), need(dot_out);
    *dot_out = dup(qifh::term_syntax_dot(u->t));
  });
}

int qifh_term_paths(const qifh_term* u, char** json_out) {
  return guarded([&] {
    need(u), need(json_out);
    Json j = Json::array();
    for (const auto& p : qifh::term_paths(u->t)) {
      j.push_back({{"path", qifh::path_to_string(p.steps)}, {"value", p.value}});
    }
    *json_out = dup(j.dump());
  });
}

int qifh_term_leq(const qifh_qo* q, const qifh_term* u, const qifh_term* v, int* out) {
  return guarded([&] {
    need(q), need(u), need(v), need(out);
    qifh::validate_term(u->t, q->q.size());
    qifh::validate_term(v->t, q->q.size());
    *out = qifh::term_leq(q->q, u->t, v->t) ? 1 : 0;
  });
}

int qifh_term_apply_aut(const qifh_qo* q, const char* perm_json, const qifh_term* u, qifh_term** out) {
  return guarded([&] {
    need(q), need(u), need(out);
    const auto g = parse(perm_json).get<qifh::Permutation>();
    *out = new qifh_term{qifh::term_apply_aut(q->q, g, u->t)};
  });
}

int qifh_hom_leq(const qifh_qo* q, const char* tree_a, const char* tree_b, int* out) {
  return guarded([&] {
    need(q), need(out);
    const auto a = qifh::qtree_from_json(parse(tree_a));
    const auto b = qifh::qtree_from_json(parse(tree_b));
    for (const auto* t : {&a, &b}) {
      for (std::size_t i = 0; i < t->size(); ++i) {
        if (!q->q.contains(t->label(i))) throw Error(ErrorCode::kInvalidArgument, "tree label outside Q");
      }
    }
    *out = qifh::hom_leq(a, b, [&](std::uint32_t x, std::uint32_t y) { return q->q.leq(x, y); }) ? 1 : 0;
  });
}

int qifh_space_from_json(const char* json, qifh_space** out) {
  return guarded([&] {
    need(out);
    *out = new qifh_space{qifh::space_from_spec(parse_loose(json))};
  });
}

void qifh_space_free(qifh_space* x) { delete x; }

size_t qifh_space_size(const qifh_space* x) { return x == nullptr ? 0 : x->x.size(); }

int qifh_space_describe(const qifh_space* x, char** json_out) {
  return guarded([&] {
    need(x), need(json_out);
    Json j = qifh::space_to_json(x->x);
    Json opens = Json::array();
    for (auto s : x->x.opens()) opens.push_back(qifh::set_to_json(x->x, s));
    j["opens"] = opens;
    j["maximal"] = qifh::set_to_json(x->x, x->x.maximal_points());
    *json_out = dup(j.dump());
  });
}

int qifh_space_is_meager(const qifh_space* x, const char* set_json, int* out) {
  return guarded([&] {
    need(x), need(out);
    *out = qifh::is_meager(x->x, qifh::set_from_json(x->x, parse(set_json))) ? 1 : 0;
  });
}

int qifh_map_is_cos(const char* map_json, int* out) {
  return guarded([&] {
    need(out);
    *out = qifh::is_cos(qifh::map_from_json(parse(map_json))) ? 1 : 0;
  });
}

int qifh_cat_quantifier(const char* map_json, const char* set_json, char** set_out) {
  return guarded([&] {
    need(set_out);
    const auto f = qifh::map_from_json(parse(map_json));
    const auto s = qifh::cat_quantifier(f, qifh::set_from_json(f.source(), parse(set_json)));
    *set_out = dup(qifh::set_to_json(f.target(), s).dump());
  });
}

int qifh_wadge_leq(const qifh_space* x, const qifh_qo* q, const char* a_json, const char* b_json, int* out) {
  return guarded([&] {
    need(x), need(q), need(out);
    *out = qifh::wadge_leq(partition_of(x->x, q->q, a_json), partition_of(x->x, q->q, b_json)) ? 1 : 0;
  });
}

int qifh_base_from_json(const qifh_space* x, const char* json, qifh_base** out) {
  return guarded([&] {
    need(x), need(out);
    *out = new qifh_base{qifh::base_from_json(parse_loose(json), x->x)};
  });
}

void qifh_base_free(qifh_base* b) { delete b; }

int qifh_base_to_json(const qifh_base* b, char** json_out) {
  return guarded([&] {
    need(b), need(json_out);
    *json_out = dup(qifh::base_to_json(b->b).dump());
  });
}

int qifh_base_shift(const qifh_base* b, const char* beta, qifh_base** out) {
  return guarded([&] {
    need(b), need(beta), need(out);
    *out = new qifh_base{qifh::base_shift(b->b, qifh::parse_ordinal(beta))};
  });
}

int qifh_base_restrict(const qifh_base* b, const char* set_json, qifh_base** out) {
  return guarded([&] {
    need(b), need(out);
    *out = new qifh_base{qifh::base_restrict(b->b, qifh::set_from_json(b->b.space(), parse(set_json)))};
  });
}

int qifh_family_eval(const qifh_base* b, const char* family_json, char** json_out) {
  return guarded([&] {
    need(b), need(json_out);
    const auto f = qifh::family_from_json(parse(family_json), b->b);
    *json_out = dup(qifh::evaluation_to_json(qifh::family_eval(f, b->b), b->b.space()).dump());
  });
}

int qifh_family_reduct(const qifh_base* b, const char* family_json, char** json_out) {
  return guarded([&] {
    need(b), need(json_out);
    const auto f = qifh::family_from_json(parse(family_json), b->b);
    *json_out = dup(qifh::family_to_json(qifh::family_reduct(f, b->b), b->b.space()).dump());
  });
}

int qifh_family_pullback(const char* map_json, const qifh_base* target, const char* family_json, char** json_out) {
  return guarded([&] {
    need(target), need(json_out);
    const auto m = qifh::map_from_json(parse(map_json));
    const auto f = qifh::family_from_json(parse(family_json), target->b);
    *json_out = dup(qifh::family_to_json(qifh::family_pullback(m, f, target->b), m.source()).dump());
  });
}

int qifh_family_pushforward(const char* map_json, const qifh_base* source, const char* family_json,
                            char** json_out) {
  return guarded([&] {
    need(source), need(json_out);
    const auto m = qifh::map_from_json(parse(map_json));
    const auto f = qifh::family_from_json(parse(family_json), source->b);
    *json_out = dup(qifh::family_to_json(qifh::family_pushforward(m, f, source->b), m.target()).dump());
  });
}

int qifh_member(const qifh_base* b, const qifh_qo* q, const qifh_term* u, const char* partition_json,
                int reduced_only, int* out) {
  return guarded([&] {
    need(b), need(q), need(u), need(out);
    qifh::validate_term(u->t, q->q.size());
    const auto a = partition_of(b->b.space(), q->q, partition_json);
    *out = qifh::member(a, u->t, b->b, qifh::MemberOptions{reduced_only != 0}) ? 1 : 0;
  });
}

int qifh_member_enum(const qifh_base* b, const qifh_qo* q, const qifh_term* u, const char* partition_json,
                     uint64_t budget, int* out) {
  return guarded([&] {
    need(b), need(q), need(u), need(out);
    qifh::validate_term(u->t, q->q.size());
    const auto a = partition_of(b->b.space(), q->q, partition_json);
    *out = qifh::member_enum(a, u->t, b->b, budget) ? 1 : 0;
  });
}

int qifh_level_set(const qifh_base* b, const qifh_qo* q, const qifh_term* u, char** json_out) {
  return guarded([&] {
    need(b), need(q), need(u), need(json_out);
    qifh::validate_term(u->t, q->q.size());
    Json j = Json::array();
    for (const auto& v : qifh::level_set(b->b, q->q.size(), u->t)) j.push_back(qifh::values_to_json(b->b.space(), v));
    *json_out = dup(j.dump());
  });
}

int qifh_suite_names(char** json_out) {
  return guarded([&] {
    need(json_out);
    *json_out = dup(Json(qifh::suite_names()).dump());
  });
}

int qifh_suite_default_config(const char* suite, char** json_out) {
  return guarded([&] {
    need(suite), need(json_out);
    const auto cfg = qifh::default_suite_config(suite);
    *json_out = dup(qifh::SuiteReport{}.to_json(cfg).at("config").dump());
  });
}

int qifh_suite_run(const char* config_json, char** report_json, char** report_text, int* passed) {
  return guarded([&] {
    need(passed);
    const Json j = parse(config_json);
    if (!j.contains("suite") || !j.at("suite").is_string()) throw Error(ErrorCode::kParse, "config needs \"suite\"");
    qifh::SuiteConfig cfg = qifh::default_suite_config(j.at("suite").get<std::string>());
    set_size(j, "max_nodes", cfg.max_nodes);
    set_u64(j, "max_subscript", cfg.max_subscript);
    set_size(j, "max_points", cfg.max_points);
    set_size(j, "max_q", cfg.max_q);
    set_size(j, "max_children", cfg.max_children);
    set_u64(j, "seed", cfg.seed);
    set_u64(j, "samples", cfg.samples);
    set_u64(j, "family_budget", cfg.family_budget);
    set_size(j, "hk_max_nodes", cfg.hk_max_nodes);
    const auto r = qifh::run_suite(cfg);
    if (report_json != nullptr) *report_json = dup(r.to_json(cfg).dump(2));
    if (report_text != nullptr) *report_text = dup(r.to_text(cfg));
    *passed = r.passed() ? 1 : 0;
  });
}

}  // extern "C"
