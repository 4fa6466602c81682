#pragma once

// Index determination for flag complexes.
//
// A vertex v is dominated by an adjacent vertex w when every neighbour of v
// other than w is also a neighbour of w. Deleting a dominated vertex is a
// strong deformation retraction of the clique complex, so the residual core
// after repeated deletions has the homotopy type of the original complex.

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "helix/flag_complex.hpp"
#include "helix/homology.hpp"

namespace helix {

struct CollapseStep {
  /// Vertex ids in the graph the collapse started from.
  int removed = 0;
  int witness = 0;
};

struct CollapseTrace {
  std::vector<CollapseStep> steps;
  CompatibilityGraph core;
};

/// Local index of the lowest-index vertex dominating v, if any.
std::optional<int> dominator(const CompatibilityGraph& g, int v);

/// Removes the lowest-index dominated vertex (witness: its lowest-index
/// dominator) until no vertex is dominated.
CollapseTrace strong_collapse(const CompatibilityGraph& g);

/// Same, but each step removes a uniformly chosen dominated vertex with a
/// uniformly chosen dominator.
CollapseTrace strong_collapse(const CompatibilityGraph& g, std::mt19937_64& rng);

/// Replays the trace on g and checks every step's domination condition and
/// that the core is the induced subgraph on the surviving vertices.
bool audit_collapse(const CompatibilityGraph& g, const CollapseTrace& trace);

/// n when g has 2n vertices and its complement is a perfect matching, so
/// that its clique complex is the boundary of the n-dimensional
/// cross-polytope (the join of n zero-spheres).
std::optional<int> recognize_cross_polytope(const CompatibilityGraph& g);

struct IndexCertificate {
  CollapseTrace trace;
  /// Non-adjacent pairs of the core, as vertex ids.
  std::vector<std::pair<int, int>> antipodes;
  HomologyProfile homology;
};

struct IndexZero {};
struct IndexCertified {
  int n = 0;
  IndexCertificate certificate;
};
struct NotMinimal {
  CollapseTrace trace;
};
struct Indeterminate {
  CollapseTrace trace;
  HomologyProfile core_homology;
  /// Smallest i with nonzero reduced H_i of the core; the index, if any,
  /// is at least i + 1 when this is set.
  std::optional<int> lowest_nonzero;
};

using IndexResult = std::variant<IndexZero, IndexCertified, NotMinimal, Indeterminate>;

/// Empty complex: index 0. Collapsible to a point: not topologically
/// minimal. Core a cross-polytope boundary on 2n vertices: index n.
/// Anything else is reported as indeterminate with the core's homology.
IndexResult determine_index(const FlagComplex& c, std::size_t capacity = default_capacity());

std::string result_name(const IndexResult& r);

}  // namespace helix
