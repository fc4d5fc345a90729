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

// qifh command-line front end. Every command goes through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qifh/qifh.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct CliError {
  int status;
  std::string message;
};

void check(int status) {
  if (status != QIFH_OK) throw CliError{status, qifh_last_error()};
}

// Owned C string from the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { qifh_free_string(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using QoHandle = Handle<qifh_qo, qifh_qo_free>;
using TermHandle = Handle<qifh_term, qifh_term_free>;
using SpaceHandle = Handle<qifh_space, qifh_space_free>;
using BaseHandle = Handle<qifh_base, qifh_base_free>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{QIFH_E_IO, "cannot open " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "-" stands for standard output.
void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError{QIFH_E_IO, "cannot write " + path};
  out << text;
}

// A document argument: an existing file's contents, or the literal text.
std::string doc(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

void load_qo(const std::string& spec, QoHandle& h) {
  auto parse_k = [&](const std::string& prefix) -> std::size_t {
    try {
      return std::stoul(spec.substr(prefix.size()));
    } catch (const std::exception&) {
      throw CliError{QIFH_E_PARSE, "bad quasiorder \"" + spec + "\""};
    }
  };
  if (spec.rfind("antichain:", 0) == 0) {
    check(qifh_qo_antichain(parse_k("antichain:"), &h.p));
  } else if (spec.rfind("chain:", 0) == 0) {
    check(qifh_qo_chain(parse_k("chain:"), &h.p));
  } else {
    check(qifh_qo_from_json(doc(spec).c_str(), &h.p));
  }
}

void load_term(const std::string& text, const QoHandle* q, const std::string& gamma, TermHandle& h) {
  check(qifh_term_parse(text.c_str(), &h.p));
  if (q != nullptr) check(qifh_term_validate(h.p, qifh_qo_size(q->p), gamma.empty() ? nullptr : gamma.c_str()));
}

void load_space(const std::string& spec, SpaceHandle& h) { check(qifh_space_from_json(doc(spec).c_str(), &h.p)); }

void load_base(const SpaceHandle& x, const std::string& spec, BaseHandle& h) {
  check(qifh_base_from_json(x.p, doc(spec).c_str(), &h.p));
}

std::string pretty(const std::string& json) { return Json::parse(json).dump(2); }

void print_bool(bool v, bool as_json, const char* key) {
  if (as_json) {
    std::cout << Json{{key, v}}.dump(2) << "\n";
  } else {
    std::cout << (v ? "true" : "false") << "\n";
  }
}

struct Options {
  bool json = false;
  std::string q = "antichain:2";
  std::string space;
  std::string base = "borel";
  std::string term;
  std::string gamma;
  std::string dot;
  std::string syntax_dot;
  std::vector<std::string> args;
  std::string set;
  std::string map;
  std::string family;
  std::string partition;
  std::string a;
  std::string b;
  bool reduced = false;
  bool use_enum = false;
  std::uint64_t budget = 1000000;
  // check
  std::uint64_t seed = 0;
  std::size_t max_nodes = 0;
  std::size_t max_points = 0;
  std::size_t max_q = 0;
  std::int64_t max_subscript = -1;
  std::uint64_t samples = 0;
  std::uint64_t family_budget = 0;
  std::string out;
  bool list = false;
};

std::string term_arg(const Options& o, std::size_t i) {
  if (i == 0 && !o.term.empty()) return o.term;
  const std::size_t k = o.term.empty() ? i : i - 1;
  if (k >= o.args.size()) throw CliError{QIFH_E_INVALID_ARGUMENT, "missing term argument"};
  return o.args[k];
}

// ---------------------------------------------------------------------------

int cmd_ord(const Options& o) {
  if (o.args.empty() || o.args.size() > 2) throw CliError{QIFH_E_INVALID_ARGUMENT, "ord takes one or two ordinals"};
  CStr norm, star, f;
  check(qifh_ord_normalize(o.args[0].c_str(), &norm.p));
  check(qifh_fmap(o.args[0].c_str(), &f.p));
  const bool zero = norm.str() == "0";
  if (!zero) check(qifh_ord_star(o.args[0].c_str(), &star.p));
  Json j{{"ordinal", norm.str()}, {"star", zero ? Json(nullptr) : Json(star.str())}, {"f", f.str()}};
  if (o.args.size() == 2) {
    int c = 0;
    CStr sum;
    check(qifh_ord_compare(o.args[0].c_str(), o.args[1].c_str(), &c));
    check(qifh_ord_add(o.args[0].c_str(), o.args[1].c_str(), &sum.p));
    j["compare"] = c;
    j["sum"] = sum.str();
  }
  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << norm.str() << "\n";
  if (!zero) std::cout << "star: " << star.str() << "\n";
  std::cout << "f: " << f.str() << "\n";
  if (o.args.size() == 2) {
    const int c = j["compare"].get<int>();
    std::cout << "compare: " << (c < 0 ? "<" : (c > 0 ? ">" : "=")) << "\n";
    std::cout << "sum: " << j["sum"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_fmap(const Options& o) {
  if (o.args.size() != 1) throw CliError{QIFH_E_INVALID_ARGUMENT, "fmap takes one ordinal"};
  CStr f;
  check(qifh_fmap(o.args[0].c_str(), &f.p));
  if (o.json) {
    std::cout << Json{{"f", f.str()}}.dump(2) << "\n";
  } else {
    std::cout << f.str() << "\n";
  }
  return kExitOk;
}

int cmd_term(const std::string& which, const Options& o) {
  QoHandle q;
  load_qo(o.q, q);
  TermHandle u;
  load_term(term_arg(o, 0), &q, o.gamma, u);
  if (which == "rank") {
    std::size_t r = 0;
    check(qifh_term_rank(u.p, &r));
    if (o.json) {
      std::cout << Json{{"rank", r}}.dump(2) << "\n";
    } else {
      std::cout << r << "\n";
    }
  } else if (which == "decompose") {
    CStr d;
    check(qifh_term_decompose(u.p, &d.p));
    if (o.json) {
      std::cout << pretty(d.str()) << "\n";
    } else {
      const Json j = Json::parse(d.str());
      std::cout << "shift: " << j["shift"].get<std::string>() << "\ncore: " << j["core"].get<std::string>() << "\n";
    }
  } else if (which == "tree") {
    CStr t;
    check(qifh_term_tree(u.p, &t.p));
    if (!o.dot.empty()) {
      CStr d;
      check(qifh_term_tree_dot(u.p, &d.p));
      write_file(o.dot, d.str());
    }
    if (!o.syntax_dot.empty()) {
      CStr d;
      check(qifh_term_syntax_dot(u.p, &d.p));
      write_file(o.syntax_dot, d.str());
    }
    if (o.dot == "-" || o.syntax_dot == "-") {
      // Standard output already carries DOT.
    } else if (o.json) {
      std::cout << pretty(t.str()) << "\n";
    } else {
      const Json j = Json::parse(t.str());
      for (const auto& n : j["nodes"]) {
        const std::string key = n.get<std::string>();
        std::cout << (key.empty() ? "e" : key) << ": " << j["labels"][key].get<std::string>() << "\n";
      }
    }
  } else if (which == "paths") {
    CStr p;
    check(qifh_term_paths(u.p, &p.p));
    if (o.json) {
      std::cout << pretty(p.str()) << "\n";
    } else {
      for (const auto& e : Json::parse(p.str())) {
        std::cout << e["path"].get<std::string>() << " -> " << e["value"].get<unsigned>() << "\n";
      }
    }
  } else if (which == "cmp") {
    TermHandle v;
    load_term(term_arg(o, 1), &q, o.gamma, v);
    int ab = 0, ba = 0;
    check(qifh_term_leq(q.p, u.p, v.p, &ab));
    check(qifh_term_leq(q.p, v.p, u.p, &ba));
    if (o.json) {
      std::cout << Json{{"leq", ab != 0}, {"geq", ba != 0}}.dump(2) << "\n";
    } else {
      std::cout << "u <| v: " << (ab ? "true" : "false") << "\nv <| u: " << (ba ? "true" : "false") << "\n";
    }
  }
  return kExitOk;
}

int cmd_homcmp(const Options& o) {
  if (o.args.size() != 2) throw CliError{QIFH_E_INVALID_ARGUMENT, "homcmp takes two tree documents"};
  QoHandle q;
  load_qo(o.q, q);
  int r = 0;
  check(qifh_hom_leq(q.p, doc(o.args[0]).c_str(), doc(o.args[1]).c_str(), &r));
  print_bool(r != 0, o.json, "hom_leq");
  return kExitOk;
}

int cmd_space(const std::string& which, const Options& o) {
  if (which == "catq" || which == "cos") {
    if (o.map.empty()) throw CliError{QIFH_E_INVALID_ARGUMENT, "--map is required"};
    const std::string m = doc(o.map);
    if (which == "cos") {
      int r = 0;
      check(qifh_map_is_cos(m.c_str(), &r));
      print_bool(r != 0, o.json, "cos");
      return kExitOk;
    }
    CStr s;
    check(qifh_cat_quantifier(m.c_str(), doc(o.set).c_str(), &s.p));
    std::cout << (o.json ? pretty(s.str()) : s.str()) << "\n";
    return kExitOk;
  }
  SpaceHandle x;
  load_space(o.space, x);
  if (which == "check") {
    CStr d;
    check(qifh_space_describe(x.p, &d.p));
    if (o.json) {
      std::cout << pretty(d.str()) << "\n";
    } else {
      const Json j = Json::parse(d.str());
      std::cout << "points: " << j["points"].dump() << "\nle: " << j["le"].dump() << "\nopens: " << j["opens"].size()
                << "\nmaximal: " << j["maximal"].dump() << "\n";
    }
  } else if (which == "meager") {
    int r = 0;
    check(qifh_space_is_meager(x.p, doc(o.set).c_str(), &r));
    print_bool(r != 0, o.json, "meager");
  } else if (which == "wadge") {
    QoHandle q;
    load_qo(o.q, q);
    int r = 0;
    check(qifh_wadge_leq(x.p, q.p, doc(o.a).c_str(), doc(o.b).c_str(), &r));
    print_bool(r != 0, o.json, "wadge_leq");
  }
  return kExitOk;
}

int cmd_family(const std::string& which, const Options& o) {
  if (o.family.empty()) throw CliError{QIFH_E_INVALID_ARGUMENT, "--family is required"};
  const std::string fam = doc(o.family);
  CStr out;
  if (which == "pull" || which == "push") {
    if (o.map.empty()) throw CliError{QIFH_E_INVALID_ARGUMENT, "--map is required"};
    const std::string m = doc(o.map);
    Json mj;
    try {
      mj = Json::parse(m);
    } catch (const Json::parse_error& e) {
      throw CliError{QIFH_E_PARSE, e.what()};
    }
    const char* side = which == "pull" ? "target" : "source";
    if (!mj.contains(side)) throw CliError{QIFH_E_PARSE, std::string("map needs a \"") + side + "\" space"};
    const Json& sj = mj[side];
    SpaceHandle x;
    check(qifh_space_from_json(sj.is_string() ? sj.get<std::string>().c_str() : sj.dump().c_str(), &x.p));
    BaseHandle b;
    load_base(x, o.base, b);
    if (which == "pull") {
      check(qifh_family_pullback(m.c_str(), b.p, fam.c_str(), &out.p));
    } else {
      check(qifh_family_pushforward(m.c_str(), b.p, fam.c_str(), &out.p));
    }
  } else {
    SpaceHandle x;
    load_space(o.space, x);
    BaseHandle b;
    load_base(x, o.base, b);
    if (which == "eval") {
      check(qifh_family_eval(b.p, fam.c_str(), &out.p));
    } else {
      check(qifh_family_reduct(b.p, fam.c_str(), &out.p));
    }
  }
  std::cout << (o.json ? pretty(out.str()) : out.str()) << "\n";
  return kExitOk;
}

int cmd_member(const Options& o) {
  SpaceHandle x;
  load_space(o.space, x);
  BaseHandle b;
  load_base(x, o.base, b);
  QoHandle q;
  load_qo(o.q, q);
  TermHandle u;
  load_term(term_arg(o, 0), &q, o.gamma, u);
  const std::string p = doc(o.partition);
  int r = 0;
  if (o.use_enum) {
    check(qifh_member_enum(b.p, q.p, u.p, p.c_str(), o.budget, &r));
  } else {
    check(qifh_member(b.p, q.p, u.p, p.c_str(), o.reduced ? 1 : 0, &r));
  }
  print_bool(r != 0, o.json, "member");
  return kExitOk;
}

int cmd_levelset(const Options& o) {
  SpaceHandle x;
  load_space(o.space, x);
  BaseHandle b;
  load_base(x, o.base, b);
  QoHandle q;
  load_qo(o.q, q);
  TermHandle u;
  load_term(term_arg(o, 0), &q, o.gamma, u);
  CStr out;
  check(qifh_level_set(b.p, q.p, u.p, &out.p));
  const Json j = Json::parse(out.str());
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "size: " << j.size() << "\n";
    for (const auto& v : j) std::cout << v.dump() << "\n";
  }
  return kExitOk;
}

int cmd_check(const Options& o) {
  if (o.list) {
    CStr names;
    check(qifh_suite_names(&names.p));
    for (const auto& n : Json::parse(names.str())) std::cout << n.get<std::string>() << "\n";
    return kExitOk;
  }
  if (o.args.size() != 1) throw CliError{QIFH_E_INVALID_ARGUMENT, "check takes one suite name"};
  Json cfg{{"suite", o.args[0]}, {"seed", o.seed}};
  if (o.max_nodes) cfg["max_nodes"] = o.max_nodes;
  if (o.max_points) cfg["max_points"] = o.max_points;
  if (o.max_q) cfg["max_q"] = o.max_q;
  if (o.max_subscript >= 0) cfg["max_subscript"] = o.max_subscript;
  if (o.samples) cfg["samples"] = o.samples;
  if (o.family_budget) cfg["family_budget"] = o.family_budget;
  CStr js, text;
  int passed = 0;
  check(qifh_suite_run(cfg.dump().c_str(), &js.p, &text.p, &passed));
  const std::string report = o.json ? js.str() + "\n" : text.str();
  if (!o.out.empty()) write_file(o.out, report);
  std::cout << report;
  return passed ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qifh: terms, trees, finite spaces and the fine hierarchy of Q-partitions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qifh_version());
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "Print JSON");
    c->add_option("--q", o.q, "Quasiorder: file, JSON, antichain:k or chain:k");
    c->add_option("--gamma", o.gamma, "Bound for term subscripts");
  };
  auto with_space = [&](CLI::App* c) {
    c->add_option("--space", o.space, "Space: file, JSON, S, D<n> or C<n>")->required();
    c->add_option("--base", o.base, "borel or a base document");
  };

  auto* ord = app.add_subcommand("ord", "Normalize an ordinal; compare and add with a second one");
  ord->add_option("ordinals", o.args, "One or two ordinal literals")->required();
  ord->add_flag("--json", o.json, "Print JSON");
  auto* fmap = app.add_subcommand("fmap", "Image of an ordinal under the level map f");
  fmap->add_option("ordinal", o.args, "Ordinal literal")->required();
  fmap->add_flag("--json", o.json, "Print JSON");

  auto* term = app.add_subcommand("term", "Term operations");
  term->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> term_cmds;
  const std::vector<std::pair<const char*, const char*>> term_help = {
      {"rank", "Height of the syntax tree"},
      {"decompose", "Shift ordinal sh(u) and core u'"},
      {"tree", "The labeled tree T(u)"},
      {"paths", "The path set F(u) with terminal labels"},
      {"cmp", "Compare two terms in both directions"}};
  for (const auto& [name, help] : term_help) {
    auto* c = term->add_subcommand(name, help);
    common(c);
    c->add_option("--term", o.term, "Term literal");
    c->add_option("terms", o.args, "Term literals");
    if (std::string(name) == "tree") {
      c->add_option("--dot", o.dot, "Write T(u) as DOT to a file (- for stdout)");
      c->add_option("--syntax-dot", o.syntax_dot, "Write the syntax tree as DOT to a file (- for stdout)");
    }
    term_cmds.emplace_back(name, c);
  }

  auto* homcmp = app.add_subcommand("homcmp", "Compare two Q-labeled trees by homomorphism");
  common(homcmp);
  homcmp->add_option("trees", o.args, "Two tree documents (file or JSON)")->required();

  auto* space = app.add_subcommand("space", "Finite spaces and maps");
  space->require_subcommand(1);
  auto* sp_check = space->add_subcommand("check", "Validate and describe a space");
  auto* sp_meager = space->add_subcommand("meager", "Is a set meager");
  auto* sp_catq = space->add_subcommand("catq", "Category quantifier image f[A]");
  auto* sp_cos = space->add_subcommand("cos", "Is a map a continuous open surjection");
  auto* sp_wadge = space->add_subcommand("wadge", "Wadge comparison of two partitions");
  for (auto* c : {sp_check, sp_meager, sp_wadge}) {
    common(c);
    c->add_option("--space", o.space, "Space: file, JSON, S, D<n> or C<n>")->required();
  }
  for (auto* c : {sp_catq, sp_cos}) {
    common(c);
    c->add_option("--map", o.map, "Map document (file or JSON)")->required();
  }
  for (auto* c : {sp_meager, sp_catq}) c->add_option("--set", o.set, "Point set as a JSON array")->required();
  sp_wadge->add_option("--a", o.a, "Left partition (file or JSON)")->required();
  sp_wadge->add_option("--b", o.b, "Right partition (file or JSON)")->required();

  auto* family = app.add_subcommand("family", "u-families");
  family->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> family_cmds;
  const std::vector<std::pair<const char*, const char*>> family_help = {
      {"eval", "Evaluate a family to the partition it determines"},
      {"reduct", "A reduced family inside the given one"},
      {"pull", "Preimage of a family along a map"},
      {"push", "Category-quantifier image of a family"}};
  for (const auto& [name, help] : family_help) {
    auto* c = family->add_subcommand(name, help);
    common(c);
    c->add_option("--family", o.family, "Family document (file or JSON)")->required();
    c->add_option("--base", o.base, "borel or a base document");
    if (std::string(name) == "pull" || std::string(name) == "push") {
      c->add_option("--map", o.map, "Map document (file or JSON)")->required();
    } else {
      c->add_option("--space", o.space, "Space: file, JSON, S, D<n> or C<n>")->required();
    }
    family_cmds.emplace_back(name, c);
  }

  auto* member = app.add_subcommand("member", "Is a partition in L(X, u)");
  common(member);
  with_space(member);
  member->add_option("--term", o.term, "Term literal")->required();
  member->add_option("--partition", o.partition, "Partition document (file or JSON)")->required();
  member->add_flag("--reduced", o.reduced, "Only reduced families");
  member->add_flag("--enum", o.use_enum, "Decide by enumerating all families");
  member->add_option("--budget", o.budget, "Family budget for --enum");

  auto* levelset = app.add_subcommand("levelset", "All partitions in L(X, u)");
  common(levelset);
  with_space(levelset);
  levelset->add_option("--term", o.term, "Term literal")->required();

  auto* chk = app.add_subcommand("check", "Run a property suite");
  chk->add_option("suite", o.args, "Suite name");
  chk->add_flag("--list", o.list, "List suites");
  chk->add_flag("--json", o.json, "Print JSON");
  chk->add_option("--seed", o.seed, "Sampling seed");
  chk->add_option("--max-nodes", o.max_nodes, "Largest term size");
  chk->add_option("--max-points", o.max_points, "Largest space size");
  chk->add_option("--max-q", o.max_q, "Largest label set");
  chk->add_option("--max-subscript", o.max_subscript, "Largest finite subscript");
  chk->add_option("--samples", o.samples, "Sample count for sampled checks");
  chk->add_option("--budget", o.family_budget, "Family enumeration budget");
  chk->add_option("--out", o.out, "Also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*ord) return cmd_ord(o);
    if (*fmap) return cmd_fmap(o);
    for (auto& [name, c] : term_cmds) {
      if (*c) return cmd_term(name, o);
    }
    if (*homcmp) return cmd_homcmp(o);
    if (*sp_check) return cmd_space("check", o);
    if (*sp_meager) return cmd_space("meager", o);
    if (*sp_catq) return cmd_space("catq", o);
    if (*sp_cos) return cmd_space("cos", o);
    if (*sp_wadge) return cmd_space("wadge", o);
    for (auto& [name, c] : family_cmds) {
      if (*c) return cmd_family(name, o);
    }
    if (*member) return cmd_member(o);
    if (*levelset) return cmd_levelset(o);
    if (*chk) return cmd_check(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << qifh_status_name(e.status) << ": " << e.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
