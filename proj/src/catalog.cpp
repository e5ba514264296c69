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

#include "metrichg/catalog.hpp"

#include <algorithm>

#include "metrichg/canonical.hpp"
#include "metrichg/enumerate.hpp"
#include "metrichg/oracle.hpp"
#include "metrichg/realizer.hpp"

namespace metrichg {

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) by_form_[entries_[i].canonical_form] = i;
}

const CatalogEntry* Catalog::find(const Hypergraph& g) const {
  if (g.n() > kMaxCanonicalVertices || entries_.empty()) return nullptr;
  auto it = by_form_.find(canonical_form(g));
  return it == by_form_.end() ? nullptr : &entries_[it->second];
}

std::optional<CatalogMatch> Catalog::match_core(const Hypergraph& g) const {
  const CatalogEntry* entry = find(g);
  if (!entry) return std::nullopt;
  CatalogMatch match;
  match.entry = entry;
  match.isomorphism = find_isomorphism(entry->core, g);
  match.metric = relabel(entry->metric, match.isomorphism);
  return match;
}

std::vector<int> expected_core_vertex_counts(int max_n) {
  std::vector<int> out;
  for (int n : {4, 5, 5, 5, 6, 7, 7, 9}) {
    if (n <= max_n) out.push_back(n);
  }
  return out;
}

std::vector<std::string> check_expected_shape(const Catalog& catalog, int max_n) {
  std::vector<int> counts;
  for (const auto& e : catalog.entries()) counts.push_back(e.core.n());
  std::sort(counts.begin(), counts.end());
  const auto expected = expected_core_vertex_counts(max_n);
  if (counts == expected) return {};
  auto show = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  return {"expected " + std::to_string(expected.size()) + " cores with vertex counts " + show(expected) + ", derived " +
          std::to_string(counts.size()) + " with " + show(counts)};
}

CatalogBuild enumerate_f0_cores(int max_n) {
  if (max_n > kMaxCatalogVertices) {
    throw SizeLimitError("catalog enumeration is capped at " + std::to_string(kMaxCatalogVertices) + " vertices");
  }
  CatalogBuild build;
  std::vector<CatalogEntry> found;
  std::map<int, std::vector<std::string>> rejected;
  for (int n = 4; n <= max_n; ++n) {
    const auto classes = enumerate_up_to_isomorphism(n, int(f0(n)), [](const Hypergraph& g) { return is_f_sparse(g); });
    const std::size_t first_of_size = found.size();
    for (const auto& g : classes) {
      if (!is_covering(g)) continue;
      ++build.examined;
      if (is_linear(g) && is_kl_sparse(g, {6, 2})) continue;
      DecompositionOptions options;
      options.catalog = &build.catalog;
      options.require_catalog = true;
      options.proper_cores_only = true;
      options.limit = 1;
      if (auto found_d = find_decompositions(g, options); !found_d.empty()) {
        std::string line = "n=" + std::to_string(n) + " " + canonical_form(g) + " splits as";
        for (const auto& core : found_d.front().cores) {
          line += " " + core.catalog_name + " on {";
          for (std::size_t i = 0; i < core.support.size(); ++i) line += (i ? "," : "") + std::to_string(core.support[i]);
          line += "}";
        }
        line += " + remainder of " + std::to_string(found_d.front().remainder.edge_count()) + " edges";
        rejected[n].push_back(std::move(line));
        continue;
      }

      CatalogEntry entry;
      // Final names need the count for this n; this one only has to be non-empty.
      entry.name = "H" + std::to_string(n);
      entry.core = g;
      entry.canonical_form = canonical_form(g);
      auto metric = alphabet_search(g, default_alphabet());
      if (!metric) {
        build.discrepancies.push_back("core " + entry.canonical_form + " has no metric over {1, 3/2, 2}");
        continue;
      }
      entry.metric = std::move(*metric);
      found.push_back(std::move(entry));
      build.catalog = Catalog(found);
    }
    const std::size_t count = found.size() - first_of_size;
    for (std::size_t i = first_of_size; i < found.size(); ++i) {
      found[i].name = "H" + std::to_string(n) + (count > 1 ? "-" + std::to_string(i - first_of_size + 1) : "");
    }
    build.catalog = Catalog(found);
  }
  for (auto& line : check_expected_shape(build.catalog, max_n)) build.discrepancies.push_back(std::move(line));
  const auto expected = expected_core_vertex_counts(max_n);
  for (int n = 4; n <= max_n; ++n) {
    const auto want = std::count(expected.begin(), expected.end(), n);
    const auto have = std::count_if(found.begin(), found.end(), [&](const CatalogEntry& e) { return e.core.n() == n; });
    if (want == have) continue;
    build.witnesses.push_back("n=" + std::to_string(n) + ": expected " + std::to_string(want) + " cores, derived " +
                              std::to_string(have) + "; obstructed candidates that split:");
    for (auto& line : rejected[n]) build.witnesses.push_back(std::move(line));
  }
  return build;
}

}  // namespace metrichg
