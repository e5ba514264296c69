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

#include <string>
#include <vector>

#include "metrichg/hypergraph.hpp"

namespace metrichg {

constexpr int kMaxCanonicalVertices = 12;

// Canonical labeling by exhaustive search over vertex orders that respect an
// iterated degree refinement. The order maximizing the edge-indicator string
// over triples in colexicographic order wins; prefixes that already lose to the
// best string are cut, and interchangeable (twin) vertices are tried once.

/// `new_id[v]` for every vertex v. Throws SizeLimitError for n > 12.
std::vector<Vertex> canonical_labeling(const Hypergraph& h);

/// Equal for two hypergraphs iff they are isomorphic.
std::string canonical_form(const Hypergraph& h);

/// The canonically relabeled hypergraph.
Hypergraph canonical_graph(const Hypergraph& h);

/// An isomorphism `from` -> `to` as a vertex map, or empty if none exists.
std::vector<Vertex> find_isomorphism(const Hypergraph& from, const Hypergraph& to);

/// Automorphisms of H as vertex maps, identity first, at most `limit` of
/// them (any subset is returned when the group is larger).
std::vector<std::vector<Vertex>> automorphisms(const Hypergraph& h, std::size_t limit = 50000);

}  // namespace metrichg
