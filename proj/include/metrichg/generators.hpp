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

#include <cstdint>
#include <span>

#include "metrichg/hypergraph.hpp"

namespace metrichg {

/// Lines {0,1,2} {0,3,4} {0,5,6} {1,3,5} {1,4,6} {2,3,6} {2,4,5}.
Hypergraph fano();

/// Order 7 is fano(); order 9 is the line set of AG(2,3) with point (x, y)
/// numbered 3x + y. Throws std::invalid_argument for other orders.
Hypergraph steiner_triple_system(int order);

Hypergraph complete(int n);

/// complete(n) without `drop`. Throws std::invalid_argument when a dropped
/// triple is malformed, out of range or listed twice.
Hypergraph complete_minus(int n, std::span<const Triple> drop);

/// Triples are tried in a seeded random order and kept when H stays
/// (6,2)-sparse, until `target_m` edges are reached or all were tried. The
/// result may have fewer edges than asked for.
Hypergraph random_62_sparse(int n, int target_m, std::uint64_t seed);

/// The same with f0-sparsity; `target_m` < 0 means as many as fit.
Hypergraph random_f0_sparse(int n, std::uint64_t seed, int target_m = -1);

}  // namespace metrichg
