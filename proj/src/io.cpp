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

#include "qifh/io.hpp"

#include <fstream>
#include <sstream>

namespace qifh {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kZeroOrdinal: return "ZeroOrdinal";
    case ErrorCode::kSingletonTerm: return "SingletonTerm";
    case ErrorCode::kNotAutomorphism: return "NotAutomorphism";
    case ErrorCode::kNotOpenSurjection: return "NotOpenSurjection";
    case ErrorCode::kDifferentSpaces: return "DifferentSpaces";
    case ErrorCode::kDifferentQ: return "DifferentQ";
    case ErrorCode::kNoReduct: return "NoReduct";
    case ErrorCode::kNodeNotInTree: return "NodeNotInTree";
    case ErrorCode::kInvalidFamily: return "InvalidFamily";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint32_t as_index(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    parse_error(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::uint32_t>();
}

std::size_t point_index(const FinSpace& x, const Json& j) {
  if (j.is_string()) {
    auto i = x.index_of(j.get<std::string>());
    if (!i) throw Error(ErrorCode::kInvalidArgument, "unknown point \"" + j.get<std::string>() + "\"");
    return *i;
  }
  const std::uint32_t i = as_index(j, "point");
  if (i >= x.size()) throw Error(ErrorCode::kInvalidArgument, "point index out of range");
  return i;
}

std::uint32_t label_index(const Quasiorder& q, const Json& j) {
  if (j.is_string()) {
    const auto& names = q.names();
    for (std::uint32_t i = 0; i < names.size(); ++i) {
      if (names[i] == j.get<std::string>()) return i;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown label \"" + j.get<std::string>() + "\"");
  }
  const std::uint32_t v = as_index(j, "label");
  if (!q.contains(v)) throw Error(ErrorCode::kInvalidArgument, "label outside Q");
  return v;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void syntax_dot(const Term& u, std::size_t& next, std::ostringstream& os) {
  const std::size_t me = next++;
  std::string label;
  switch (u.kind()) {
    case TermKind::kConst: label = std::to_string(u.label()); break;
    case TermKind::kShift: label = "s[" + to_string(u.subscript()) + "]"; break;
    case TermKind::kFQ: label = "Fq[" + std::to_string(u.label()) + "]"; break;
    case TermKind::kFOrd: label = "Fo[" + to_string(u.subscript()) + "]"; break;
  }
  os << "  n" << me << " [label=\"" << dot_escape(label) << "\"];\n";
  auto edge = [&](const Term& c) {
    const std::size_t id = next;
    os << "  n" << me << " -> n" << id << ";\n";
    syntax_dot(c, next, os);
  };
  if (u.is_s_term()) edge(u.body());
  for (const Term& c : u.children()) edge(c);
}

template <class Label, class Show>
std::string tree_dot(const LabeledTree<Label>& t, Show&& show) {
  std::ostringstream os;
  os << "digraph T {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string addr = t.address(i).empty() ? std::string("e") : address_to_string(t.address(i));
    os << "  n" << i << " [label=\"" << dot_escape(addr + ": " + show(t.label(i))) << "\"];\n";
  }
  for (std::size_t i = 1; i < t.size(); ++i) os << "  n" << t.parent(i) << " -> n" << i << ";\n";
  os << "}\n";
  return os.str();
}

LabeledTree<Term> core_tree(const Term& u) { return term_tree(term_decompose(u).core); }

TFamily shape_of(const LabeledTree<Term>& tree, const std::vector<PointSet>& sets) {
  TFamily f(sets.at(0));
  for (std::size_t i = 1; i < tree.size(); ++i) f.add_child(static_cast<std::size_t>(tree.parent(i)), sets.at(i));
  return f;
}

UFamily family_rec(const Json& j, const FinSpace& x, const std::optional<Term>& expected, PointSet carrier) {
  Term u;
  if (j.is_object() && j.contains("term")) {
    if (!j.at("term").is_string()) parse_error("\"term\" must be a term literal");
    u = parse_term(j.at("term").get<std::string>());
    if (expected && !(u == *expected)) {
      throw Error(ErrorCode::kInvalidFamily, "nested family term " + to_string(u) + " differs from the node label " +
                                                 to_string(*expected));
    }
  } else if (expected) {
    u = *expected;
  } else {
    parse_error("missing field \"term\"");
  }
  if (j.is_object() && j.contains("carrier")) {
    const PointSet c = set_from_json(x, j.at("carrier"));
    if (c != carrier) throw Error(ErrorCode::kInvalidFamily, "carrier differs from the expected component");
  }
  if (u.is_singleton()) return whole_family(u, carrier);
  const LabeledTree<Term> tree = core_tree(u);
  UFamily f{u, carrier, std::vector<PointSet>(tree.size(), 0), {}};
  const Json& sets = field(j, "sets");
  if (!sets.is_object()) parse_error("\"sets\" must be an object keyed by node");
  std::vector<bool> seen(tree.size(), false);
  for (auto it = sets.begin(); it != sets.end(); ++it) {
    auto node = tree.find(parse_address(it.key()));
    if (!node) throw Error(ErrorCode::kNodeNotInTree, "node \"" + it.key() + "\" is not in T(u')");
    f.sets[*node] = set_from_json(x, it.value());
    seen[*node] = true;
  }
  if (!seen[0]) {
    f.sets[0] = carrier;
    seen[0] = true;
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::kInvalidFamily, "no set for node " + address_to_string(tree.address(i)));
  }
  const auto comps = components(shape_of(tree, f.sets));
  const Json empty = Json::object();
  const Json& kids = j.contains("children") ? j.at("children") : empty;
  if (!kids.is_object()) parse_error("\"children\" must be an object keyed by node");
  for (auto it = kids.begin(); it != kids.end(); ++it) {
    if (!tree.find(parse_address(it.key()))) {
      throw Error(ErrorCode::kNodeNotInTree, "node \"" + it.key() + "\" is not in T(u')");
    }
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const Term& label = tree.label(i);
    const std::string key = address_to_string(tree.address(i));
    const Json* sub = nullptr;
    for (auto it = kids.begin(); it != kids.end(); ++it) {
      if (parse_address(it.key()) == tree.address(i)) sub = &it.value();
    }
    if (sub == nullptr) {
      if (!label.is_singleton()) throw Error(ErrorCode::kInvalidFamily, "no nested family for node \"" + key + "\" (label " + to_string(label) + ")");
      f.nested.push_back(whole_family(label, comps[i]));
    } else {
      f.nested.push_back(family_rec(*sub, x, label, comps[i]));
    }
  }
  return f;
}

}  // namespace

Quasiorder qo_from_json(const Json& j) {
  const std::size_t k = as_index(field(j, "size"), "size");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> le;
  if (j.contains("le")) {
    if (!j.at("le").is_array()) parse_error("\"le\" must be an array of pairs");
    for (const auto& p : j.at("le")) {
      if (!p.is_array() || p.size() != 2) parse_error("\"le\" entries must be pairs");
      const auto a = as_index(p[0], "element"), b = as_index(p[1], "element");
      if (a >= k || b >= k) throw Error(ErrorCode::kInvalidArgument, "element out of range");
      le.emplace_back(a, b);
    }
  }
  Quasiorder q = Quasiorder::from_pairs(k, le);
  if (j.contains("names")) {
    std::vector<std::string> names(k);
    for (std::size_t i = 0; i < k; ++i) names[i] = std::to_string(i);
    const Json& n = j.at("names");
    if (n.is_array()) {
      if (n.size() != k) throw Error(ErrorCode::kInvalidArgument, "names must list every element");
      for (std::size_t i = 0; i < k; ++i) names[i] = n[i].get<std::string>();
    } else if (n.is_object()) {
      for (auto it = n.begin(); it != n.end(); ++it) {
        std::size_t i = 0;
        try {
          i = std::stoul(it.key());
        } catch (const std::exception&) {
          parse_error("names keys must be element indices");
        }
        if (i >= k) throw Error(ErrorCode::kInvalidArgument, "name for an element out of range");
        names[i] = it.value().get<std::string>();
      }
    } else {
      parse_error("\"names\" must be an object or an array");
    }
    q.set_names(std::move(names));
  }
  return q;
}

Json qo_to_json(const Quasiorder& q) {
  Json j;
  j["size"] = q.size();
  Json le = Json::array();
  for (std::uint32_t a = 0; a < q.size(); ++a) {
    for (std::uint32_t b = 0; b < q.size(); ++b) {
      if (a != b && q.leq(a, b)) le.push_back({a, b});
    }
  }
  j["le"] = le;
  if (!q.names().empty()) {
    Json names = Json::object();
    for (std::uint32_t i = 0; i < q.size(); ++i) names[std::to_string(i)] = q.name(i);
    j["names"] = names;
  }
  return j;
}

FinSpace space_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array()) parse_error("\"points\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& p : pts) {
    if (!p.is_string()) parse_error("point names must be strings");
    names.push_back(p.get<std::string>());
  }
  if (names.size() > kMaxPoints) throw Error(ErrorCode::kInvalidArgument, "too many points");
  FinSpace tmp = FinSpace::discrete(names.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> le;
  auto idx = [&](const Json& v) -> std::uint32_t {
    if (!v.is_string()) parse_error("\"le\" entries must name points");
    for (std::uint32_t i = 0; i < names.size(); ++i) {
      if (names[i] == v.get<std::string>()) return i;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown point \"" + v.get<std::string>() + "\"");
  };
  if (j.contains("le")) {
    for (const auto& p : j.at("le")) {
      if (!p.is_array() || p.size() != 2) parse_error("\"le\" entries must be pairs");
      le.emplace_back(idx(p[0]), idx(p[1]));
    }
  }
  return FinSpace::from_pairs(names.size(), le, names);
}

Json space_to_json(const FinSpace& x) {
  Json j;
  Json pts = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) pts.push_back(x.name(i));
  j["points"] = pts;
  Json le = Json::array();
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (a != b && x.leq(a, b)) le.push_back({x.name(a), x.name(b)});
    }
  }
  j["le"] = le;
  return j;
}

FinSpace space_from_spec(const Json& j) {
  if (!j.is_string()) return space_from_json(j);
  const std::string s = j.get<std::string>();
  if (s == "S") return FinSpace::sierpinski();
  if (s.size() >= 2 && (s[0] == 'D' || s[0] == 'C')) {
    std::size_t n = 0;
    try {
      n = std::stoul(s.substr(1));
    } catch (const std::exception&) {
      parse_error("unknown space \"" + s + "\"");
    }
    return s[0] == 'D' ? FinSpace::discrete(n) : FinSpace::chain(n);
  }
  parse_error("unknown space \"" + s + "\"");
}

PointSet set_from_json(const FinSpace& x, const Json& j) {
  if (!j.is_array()) parse_error("a point set must be an array");
  PointSet s = 0;
  for (const auto& p : j) s |= singleton(point_index(x, p));
  return s;
}

Json set_to_json(const FinSpace& x, PointSet s) {
  Json j = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((s >> i) & 1U) j.push_back(x.name(i));
  }
  return j;
}

QPartition partition_from_json(const Json& j, const FinSpace& x, const Quasiorder& q) {
  if (j.is_object() && j.contains("space") && j.at("space").is_object()) {
    if (!(space_from_json(j.at("space")) == x)) {
      throw Error(ErrorCode::kDifferentSpaces, "partition space differs from the given space");
    }
  }
  const Json& vals = field(j, "values");
  QPartition a{x, q, std::vector<std::uint32_t>(x.size(), kNoLabel)};
  if (vals.is_object()) {
    for (auto it = vals.begin(); it != vals.end(); ++it) a.values[point_index(x, Json(it.key()))] = label_index(q, it.value());
  } else if (vals.is_array()) {
    if (vals.size() != x.size()) throw Error(ErrorCode::kInvalidArgument, "partition is not total");
    for (std::size_t i = 0; i < x.size(); ++i) a.values[i] = label_index(q, vals[i]);
  } else {
    parse_error("\"values\" must be an object or an array");
  }
  a.validate();
  return a;
}

Json values_to_json(const FinSpace& x, const std::vector<std::uint32_t>& values) {
  Json j = Json::object();
  for (std::size_t i = 0; i < x.size() && i < values.size(); ++i) {
    if (values[i] != kNoLabel) j[x.name(i)] = values[i];
  }
  return j;
}

Json partition_to_json(const QPartition& a) { return Json{{"values", values_to_json(a.space, a.values)}}; }

ContMap map_from_json(const Json& j) {
  FinSpace src = space_from_spec(field(j, "source"));
  FinSpace tgt = space_from_spec(field(j, "target"));
  const Json& vals = field(j, "values");
  std::vector<std::uint32_t> v(src.size(), 0);
  std::vector<bool> seen(src.size(), false);
  if (vals.is_object()) {
    for (auto it = vals.begin(); it != vals.end(); ++it) {
      const std::size_t p = point_index(src, Json(it.key()));
      v[p] = static_cast<std::uint32_t>(point_index(tgt, it.value()));
      seen[p] = true;
    }
  } else if (vals.is_array() && vals.size() == src.size()) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      v[i] = static_cast<std::uint32_t>(point_index(tgt, vals[i]));
      seen[i] = true;
    }
  } else {
    parse_error("\"values\" must map every source point");
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::kInvalidArgument, "map is undefined at " + src.name(i));
  }
  return ContMap(std::move(src), std::move(tgt), std::move(v));
}

Json map_to_json(const ContMap& f) {
  Json vals = Json::object();
  for (std::size_t i = 0; i < f.source().size(); ++i) vals[f.source().name(i)] = f.target().name(f(i));
  return Json{{"source", space_to_json(f.source())}, {"target", space_to_json(f.target())}, {"values", vals}};
}

Base base_from_json(const Json& j, const FinSpace& x) {
  if (j.is_string()) {
    if (j.get<std::string>() == "borel") return base_borel(x);
    parse_error("unknown base \"" + j.get<std::string>() + "\"");
  }
  const PointSet carrier = j.contains("carrier") ? set_from_json(x, j.at("carrier")) : x.points();
  std::vector<BaseStep> steps;
  const Json& js = field(j, "steps");
  if (!js.is_array()) parse_error("\"steps\" must be an array");
  for (const auto& st : js) {
    const Json& t = field(st, "threshold");
    Ordinal th = t.is_string() ? parse_ordinal(t.get<std::string>()) : Ordinal::natural(as_index(t, "threshold"));
    const Json& lv = field(st, "level");
    SetFamily level;
    if (lv.is_string() && lv.get<std::string>() == "all") {
      level = SetFamily::power_set(carrier);
    } else if (lv.is_string() && lv.get<std::string>() == "opens") {
      level = SetFamily::of(x.points(), x.opens()).restrict(carrier);
    } else if (lv.is_array()) {
      std::vector<PointSet> sets;
      for (const auto& s : lv) sets.push_back(set_from_json(x, s));
      level = SetFamily::of(carrier, std::move(sets));
    } else {
      parse_error("\"level\" must be \"all\", \"opens\" or an array of sets");
    }
    steps.push_back({std::move(th), std::move(level)});
  }
  return Base(x, carrier, std::move(steps));
}

Json base_to_json(const Base& base) {
  Json steps = Json::array();
  for (const auto& st : base.steps()) {
    Json level;
    if (st.level.is_power_set()) {
      level = "all";
    } else {
      level = Json::array();
      for (PointSet s : st.level.members()) level.push_back(set_to_json(base.space(), s));
    }
    steps.push_back({{"threshold", to_string(st.threshold)}, {"level", level}});
  }
  return Json{{"carrier", set_to_json(base.space(), base.carrier())}, {"steps", steps}};
}

LabeledTree<std::uint32_t> qtree_from_json(const Json& j) {
  const Json& nodes = field(j, "nodes");
  const Json& labels = field(j, "labels");
  if (!nodes.is_array() || !labels.is_object()) parse_error("tree needs a \"nodes\" array and a \"labels\" object");
  std::vector<std::pair<Address, std::uint32_t>> entries;
  for (const auto& n : nodes) {
    if (!n.is_string()) parse_error("node addresses must be strings");
    const std::string key = n.get<std::string>();
    const Address a = parse_address(key);
    const Json* lab = nullptr;
    for (auto it = labels.begin(); it != labels.end(); ++it) {
      if (parse_address(it.key()) == a) lab = &it.value();
    }
    if (lab == nullptr) throw Error(ErrorCode::kInvalidArgument, "no label for node \"" + key + "\"");
    entries.emplace_back(a, as_index(*lab, "label"));
  }
  std::sort(entries.begin(), entries.end());
  if (entries.empty() || !entries.front().first.empty()) throw Error(ErrorCode::kInvalidArgument, "tree needs a root");
  LabeledTree<std::uint32_t> t(entries.front().second);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const Address& a = entries[i].first;
    if (a == entries[i - 1].first) throw Error(ErrorCode::kInvalidArgument, "duplicate node " + address_to_string(a));
    auto p = t.find(Address(a.begin(), a.end() - 1));
    if (!p || t.children(*p).size() != a.back()) {
      throw Error(ErrorCode::kInvalidArgument, "nodes do not form a normal tree at " + address_to_string(a));
    }
    t.add_child(*p, entries[i].second);
  }
  return t;
}

Json qtree_to_json(const LabeledTree<std::uint32_t>& t) {
  Json nodes = Json::array();
  Json labels = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nodes.push_back(address_to_string(t.address(i)));
    labels[address_to_string(t.address(i))] = t.label(i);
  }
  return Json{{"nodes", nodes}, {"labels", labels}};
}

UFamily family_from_json(const Json& j, const Base& base) {
  UFamily f = family_rec(j, base.space(), std::nullopt, base.carrier());
  validate_family(f, base);
  return f;
}

Json family_to_json(const UFamily& f, const FinSpace& x) {
  Json j;
  j["term"] = to_string(f.term);
  j["carrier"] = set_to_json(x, f.carrier);
  if (f.is_whole()) return j;
  const LabeledTree<Term> tree = core_tree(f.term);
  Json sets = Json::object();
  Json kids = Json::object();
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const std::string key = address_to_string(tree.address(i));
    sets[key] = set_to_json(x, f.sets[i]);
    if (!tree.label(i).is_singleton()) kids[key] = family_to_json(f.nested[i], x);
  }
  j["sets"] = sets;
  if (!kids.empty()) j["children"] = kids;
  return j;
}

Json evaluation_to_json(const Evaluation& ev, const FinSpace& x) {
  if (ev.undetermined) {
    return Json{{"undetermined", {{"point", x.name(ev.undetermined->point)}, {"labels", ev.undetermined->labels}}}};
  }
  return Json{{"values", values_to_json(x, ev.values)}};
}

Json term_tree_to_json(const Term& u) {
  const LabeledTree<Term> t = term_tree(u);
  Json nodes = Json::array();
  Json labels = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nodes.push_back(address_to_string(t.address(i)));
    labels[address_to_string(t.address(i))] = to_string(t.label(i));
  }
  return Json{{"nodes", nodes}, {"labels", labels}};
}

std::string term_syntax_dot(const Term& u) {
  std::ostringstream os;
  os << "digraph term {\n";
  std::size_t next = 0;
  syntax_dot(u, next, os);
  os << "}\n";
  return os.str();
}

std::string term_tree_dot(const Term& u) {
  return tree_dot(term_tree(u), [](const Term& t) { return to_string(t); });
}

std::string qtree_dot(const LabeledTree<std::uint32_t>& t) {
  return tree_dot(t, [](std::uint32_t q) { return std::to_string(q); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace qifh
