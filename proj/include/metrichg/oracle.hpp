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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "metrichg/hypergraph.hpp"
#include "metrichg/metric.hpp"

namespace metrichg {

/// For each hyperedge, the vertex that is between the other two.
using MiddleAssignment = std::map<Triple, Vertex>;

struct OracleBudget {
  int max_vertices = 9;
  long max_nodes = 10'000'000;
  /// Wall-clock limit in seconds; <= 0 disables it.
  double max_seconds = 0;
  /// How many pruned branches are reported individually.
  int max_reasons = 64;
};

struct SearchStats {
  /// 3^|E| complete middle assignments.
  mpz_class branch_space;
  /// Complete assignments decided so far: pruned subtrees count all their leaves.
  mpz_class branches_covered;
  long nodes = 0;
  long pruned_by_propagation = 0;
  long pruned_by_lp = 0;
  long pruned_by_symmetry = 0;
  long lp_pivots = 0;
  double seconds = 0;
};

/// Why a partial middle assignment has no metric.
struct BranchFailure {
  enum class Reason { EqualityPropagation, LinearProgram, Symmetry };
  std::vector<std::pair<Triple, Vertex>> prefix;
  Reason reason;
};

struct MetricVerdict {
  FiniteMetric witness;
  MiddleAssignment assignment;
  SearchStats stats;
};

struct NonmetricVerdict {
  SearchStats stats;
  std::vector<BranchFailure> failures;
};

struct BudgetExceededVerdict {
  SearchStats stats;
  std::string limit;
};

using MetricityVerdict = std::variant<MetricVerdict, NonmetricVerdict, BudgetExceededVerdict>;

/// Complete exact decision of whether some metric M has H_M = H.
///
/// Branches over the middle vertex of every edge. A branch is the linear
/// system over pair distances with d(x,z) = d(x,y) + d(y,z) for each edge with
/// middle y, strict triangle inequalities in every orientation for non-edges and
/// positive distances. The system is homogeneous, so strictness is expressed as
/// unit slack. Partial assignments are pruned by equality propagation and then
/// by a warm-started exact simplex; a feasible leaf yields the witness. A failed
/// choice also rules out its images under the automorphisms of H that fix the
/// current prefix.
///
/// Throws SizeLimitError when n exceeds budget.max_vertices.
MetricityVerdict decide_metric(const Hypergraph& h, const OracleBudget& budget = {});

/// Order in which the oracle assigns middles: most vertex overlap first.
std::vector<Triple> branch_order(const Hypergraph& h);

constexpr int kMaxAlphabetVertices = 10;

/// {1, 3/2, 2}.
std::vector<Rational> default_alphabet();

/// Backtracking over distance values from `alphabet` for every pair, checking
/// the metric axioms and the exact collinearity pattern of H on each completed
/// triple. Pairs are filled in colexicographic order ((0,1), (0,2), (1,2),
/// (0,3), ...) with values ascending; the first solution in that order is
/// returned. Throws SizeLimitError for n > 10.
std::optional<FiniteMetric> alphabet_search(const Hypergraph& h, std::span<const Rational> alphabet);

/// Candidate values per pair, indexed by `pair_index`.
using PairDomains = std::vector<std::vector<Rational>>;

/// Colexicographic index of the pair {x, y}.
int pair_index(Vertex x, Vertex y);

/// Visits every metric drawn from `domains` that realizes H, in search order,
/// until `visit` returns false. Returns the number of solutions visited.
/// `domains` must be ordered by pair_index and have n(n-1)/2 entries.
long for_each_domain_metric(const Hypergraph& h, const PairDomains& domains,
                            const std::function<bool(const FiniteMetric&)>& visit);

}  // namespace metrichg
