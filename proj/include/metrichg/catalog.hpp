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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metrichg/hypergraph.hpp"
#include "metrichg/metric.hpp"

namespace metrichg {

constexpr int kMaxCatalogVertices = 10;

struct CatalogEntry {
  std::string name;
  /// In canonical labeling.
  Hypergraph core;
  /// Distances in {1, 3/2, 2}; realizes `core`.
  FiniteMetric metric;
  std::string canonical_form;
};

struct CatalogMatch {
  const CatalogEntry* entry = nullptr;
  /// The entry's metric on the labels of the queried hypergraph.
  FiniteMetric metric;
  /// Vertex map from the entry's core onto the query.
  std::vector<Vertex> isomorphism;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Entry isomorphic to G, by canonical form. G may have isolated vertices
  /// only if the entry does too, so pass H[X_i] with X_i its support.
  const CatalogEntry* find(const Hypergraph& g) const;

  /// find() plus the entry's metric transported onto G.
  std::optional<CatalogMatch> match_core(const Hypergraph& g) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> by_form_;
};

struct CatalogBuild {
  Catalog catalog;
  /// Expected-shape failures and cores with no alphabet realization.
  std::vector<std::string> discrepancies;
  /// For every vertex count whose core count differs from the expected list:
  /// each obstructed candidate of that size that was not kept, with the
  /// decomposition into smaller cores that disqualified it.
  std::vector<std::string> witnesses;
  /// f0-sparse covering hypergraphs examined.
  long examined = 0;
};

/// Hypergraphs that need carving out. A core is f0-sparse, has no isolated
/// vertex, fails the remainder conditions (two edges share two vertices, or
/// three edges lie inside six vertices) and has no decomposition, valid for
/// stitching, whose cores are all strictly smaller catalog entries. Entries are
/// ordered by vertex count, edge count and canonical form and named by vertex
/// count, with an index when several share it ("H5-1").
///
/// Throws SizeLimitError for max_n > 10.
CatalogBuild enumerate_f0_cores(int max_n);

/// Vertex counts of the expected core list, up to and including max_n.
std::vector<int> expected_core_vertex_counts(int max_n);

/// Differences between the catalog and expected_core_vertex_counts(max_n).
std::vector<std::string> check_expected_shape(const Catalog& catalog, int max_n);

}  // namespace metrichg
