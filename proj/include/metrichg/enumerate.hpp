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

#include <functional>
#include <vector>

#include "metrichg/hypergraph.hpp"

namespace metrichg {

using HypergraphFilter = std::function<bool(const Hypergraph&)>;

/// Every hypergraph on exactly n vertices (isolated vertices allowed) with at
/// most `max_edges` edges that passes `keep`, one per isomorphism class, in
/// canonical labeling. Classes are grown one edge at a time, so `keep` must be
/// closed under edge removal. Sorted by edge count, then canonical form.
std::vector<Hypergraph> enumerate_up_to_isomorphism(int n, int max_edges, const HypergraphFilter& keep);

/// No vertex is isolated.
bool is_covering(const Hypergraph& h);

}  // namespace metrichg
