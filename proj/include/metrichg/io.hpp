/*
 * Copyright 2026 The metrichg Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "metrichg/catalog.hpp"
#include "metrichg/hypergraph.hpp"
#include "metrichg/metric.hpp"
#include "metrichg/oracle.hpp"

namespace metrichg {

using Json = nlohmann::json;

// ".hg": a line "n m", then m lines "a b c". '#' starts a comment. Vertices of
// a line may come in any order; repeated ids, ids >= n, duplicate edges and a
// wrong edge count are rejected with the offending line number.
Hypergraph parse_hg(std::string_view text);
std::string format_hg(const Hypergraph& h);

// {"n": int, "edges": [[a, b, c], ...]} with the same checks.
Hypergraph parse_hypergraph_json(std::string_view text);
Json hypergraph_to_json(const Hypergraph& h);

/// Either format; JSON when the first non-blank character is '{'.
Hypergraph parse_hypergraph(std::string_view text);

// ".fm": a line "n", then one line "i j value" per pair i < j, values exact
// ("3/2") or decimal ("1.5"). Every pair must appear exactly once. The metric
// axioms are not checked here.
FiniteMetric parse_fm(std::string_view text);
std::string format_fm(const FiniteMetric& m);

/// Rows of "p/q" strings.
Json metric_to_json(const FiniteMetric& m);
FiniteMetric metric_from_json(const Json& j);

Json stats_to_json(const SearchStats& s);
/// {"verdict", "witness", "assignment", "stats", ...} for any verdict.
Json certificate_to_json(const Hypergraph& h, const MetricityVerdict& v);

/// List of {name, n, edges, metric, canonical_form}; metric maps "i,j" to "p/q".
Json catalog_to_json(const Catalog& c);
/// Throws ParseError when an entry's metric does not realize its core or the
/// stored canonical form is stale.
Catalog catalog_from_json(const Json& j);

/// Throws std::runtime_error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace metrichg
