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
#include <stdexcept>
#include <string>
#include <vector>

#include "metrichg/hypergraph.hpp"
#include "metrichg/metric.hpp"
#include "metrichg/oracle.hpp"

namespace metrichg {

class Catalog;

/// The distinguished vertex x_e of every edge.
using EdgeLabeling = std::map<Triple, Vertex>;

/// x_e = smallest vertex of e.
EdgeLabeling auto_labeling(const Hypergraph& h);

/// The input does not meet a construction's precondition. `witness` is a
/// vertex set inducing too many edges; `overlap` two edges sharing two vertices.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::vector<Vertex> witness,
                    std::optional<std::pair<Triple, Triple>> overlap = std::nullopt)
      : std::runtime_error(what), witness_(std::move(witness)), overlap_(overlap) {}

  const std::vector<Vertex>& witness() const { return witness_; }
  const std::optional<std::pair<Triple, Triple>>& overlap() const { return overlap_; }

 private:
  std::vector<Vertex> witness_;
  std::optional<std::pair<Triple, Triple>> overlap_;
};

/// A constructed metric failed its own verification, or a structural claim
/// the construction relies on did not hold.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The oracle fallback ran out of budget.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// d(x,y) = 1 if {x,y} ⊂ e and x_e ∈ {x,y}; 2 if {x,y} ⊂ e and x_e ∉ {x,y};
/// 3/2 otherwise.
///
/// Requires H to be (6,2)-sparse with every two edges sharing at most one
/// vertex; throws PreconditionError otherwise. The result is verified.
FiniteMetric rho0_construct(const Hypergraph& h);
FiniteMetric rho0_construct(const Hypergraph& h, const EdgeLabeling& labeling);

/// The same assignment without preconditions or verification. Empty when two
/// edges ask for different values on a shared pair.
std::optional<FiniteMetric> rho0_values(const Hypergraph& h, const EdgeLabeling& labeling);

/// A metric realizing a (6,2)-sparse H.
///
/// With n <= 5: the equilateral metric when H has no edges, else the auto-labeled
/// rho0 values when consistent and correct, else the first alphabet_search
/// solution over {1, 3/2, 2}. With n >= 6: each component with six or more
/// vertices gets rho0, smaller ones the n <= 5 rule, and all isolated vertices
/// together one equilateral block; blocks are joined by disjoint_union_metric in
/// order of their smallest vertex.
///
/// Throws PreconditionError with a 6-set witness when H is not (6,2)-sparse.
FiniteMetric realize_62sparse(const Hypergraph& h);

struct Core {
  /// X_i, ascending.
  std::vector<Vertex> support;
  /// E[X_i].
  std::vector<Triple> edges;
  /// Matching catalog entry, empty when there is none or no catalog was given.
  std::string catalog_name;
};

struct Decomposition {
  std::vector<Core> cores;
  /// H minus the core edges, on all of V.
  Hypergraph remainder;
  /// Structural claims that do not hold for this decomposition.
  std::vector<std::string> discrepancies;
};

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(const std::string& what, std::vector<std::string> diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

struct DecompositionOptions {
  const Catalog* catalog = nullptr;
  /// Only accept decompositions whose cores all match a catalog entry.
  bool require_catalog = false;
  /// Skip the core X = V(H) carrying every edge.
  bool proper_cores_only = false;
  /// Stop after this many; 0 keeps all.
  std::size_t limit = 0;
};

/// Candidate core supports: vertex sets of connected sets of at most six edges
/// that contain two edges sharing two vertices or three edges inside six
/// vertices. Ascending by size, then by vertex list.
std::vector<VertexSet> candidate_core_supports(const Hypergraph& h);

/// Violated structural requirements of `d` for H (empty when valid): at most
/// two cores, E[X_i] really induced, |X_i ∩ X_j| <= 1, remainder (6,2)-sparse
/// with pairwise one-vertex intersections, remainder edges meeting X_1 ∪ X_2 in
/// at most one vertex when the cores touch, and remainder edges meeting each
/// X_i in at most one vertex (needed for stitching).
std::vector<std::string> check_decomposition(const Hypergraph& h, const Decomposition& d);

/// All decompositions with at most two cores taken from candidate_core_supports,
/// ordered by catalog-matched cores first, then fewest removed edges, smallest
/// total support, and vertex lists.
std::vector<Decomposition> find_decompositions(const Hypergraph& h, const DecompositionOptions& options = {});

/// The preferred decomposition of an f0-sparse H. Its `discrepancies` list any
/// core that matches no catalog entry (when a catalog is given).
///
/// Throws PreconditionError when H is not f0-sparse and DecompositionError
/// when no decomposition satisfies every structural requirement.
Decomposition decompose_f0(const Hypergraph& h, const Catalog* catalog = nullptr);

struct F0Options {
  const Catalog* catalog = nullptr;
  OracleBudget oracle_budget;
};

struct Realization {
  FiniteMetric metric;
  /// "62sparse", "decomposition", "components" or "oracle".
  std::string method;
  std::optional<Decomposition> decomposition;
  int oracle_fallbacks = 0;
  std::vector<std::string> log;
};

/// A metric realizing an f0-sparse H.
///
/// (6,2)-sparse inputs that are linear or have at most five vertices go to
/// realize_62sparse. Otherwise decompositions are tried in order: rho0 of the
/// remainder on all of V, core pairs overwritten by the core metric (catalog or
/// alphabet search), first with auto labels and then with other labels on the
/// remainder edges touching a core, then with the core pairs searched over
/// {1, 3/2, 2}. Disconnected inputs are then split into components. The oracle
/// is the last resort and every use of it is counted and logged.
///
/// Throws PreconditionError when H is not f0-sparse, OracleBudgetError when the
/// fallback runs out of budget and VerificationError when nothing works.
Realization realize_f0_report(const Hypergraph& h, const F0Options& options = {});
FiniteMetric realize_f0(const Hypergraph& h, const F0Options& options = {});

}  // namespace metrichg
