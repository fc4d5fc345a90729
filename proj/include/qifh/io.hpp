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

#include <string>

#include "json.hpp"
#include "qifh/hierarchy.hpp"
#include "qifh/ltree.hpp"
#include "qifh/quasiorder.hpp"
#include "qifh/space.hpp"
#include "qifh/term.hpp"

namespace qifh {

using Json = nlohmann::ordered_json;

// Every reader throws Error(kParse) on malformed documents and
// Error(kInvalidArgument) on well-formed but invalid content.

/// {"size": k, "le": [[i,j], ...], "names": {"0": "x", ...}}
Quasiorder qo_from_json(const Json& j);
Json qo_to_json(const Quasiorder& q);

/// {"points": ["a", ...], "le": [["a","b"], ...]}
FinSpace space_from_json(const Json& j);
Json space_to_json(const FinSpace& x);
/// "S" (Sierpinski), "D<n>" (discrete), "C<n>" (chain), or a space document.
FinSpace space_from_spec(const Json& j);

/// Point names to a set.
PointSet set_from_json(const FinSpace& x, const Json& j);
Json set_to_json(const FinSpace& x, PointSet s);

/// {"values": {"a": 0, ...}}; labels are indices or names of Q. An embedded
/// "space" document must agree with `x`.
QPartition partition_from_json(const Json& j, const FinSpace& x, const Quasiorder& q);
Json partition_to_json(const QPartition& a);
/// Values over the ambient space; points holding kNoLabel are skipped.
Json values_to_json(const FinSpace& x, const std::vector<std::uint32_t>& values);

/// {"source": <space>, "target": <space>, "values": {"a": "b", ...}}
ContMap map_from_json(const Json& j);
Json map_to_json(const ContMap& f);

/// "borel" or {"steps": [{"threshold": "<ord>", "level": "opens" | "all" | [[...], ...]}, ...]}
Base base_from_json(const Json& j, const FinSpace& x);
Json base_to_json(const Base& base);

/// {"nodes": ["", "0", ...], "labels": {"": 0, ...}} with labels in Q.
LabeledTree<std::uint32_t> qtree_from_json(const Json& j);
Json qtree_to_json(const LabeledTree<std::uint32_t>& t);

/// {"term": "...", "carrier": [...], "sets": {"<node>": [...]}, "children": {"<node>": <family>}}
/// The top carrier defaults to the base carrier; nested families default to
/// the node's component, and singleton-labeled nodes may be omitted.
UFamily family_from_json(const Json& j, const Base& base);
Json family_to_json(const UFamily& f, const FinSpace& x);

/// Partition values or {"undetermined": {"point": ..., "labels": [...]}}.
Json evaluation_to_json(const Evaluation& ev, const FinSpace& x);

Json term_tree_to_json(const Term& u);
std::string term_syntax_dot(const Term& u);
/// T(u) with constants and s-terms as labels.
std::string term_tree_dot(const Term& u);
std::string qtree_dot(const LabeledTree<std::uint32_t>& t);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qifh
