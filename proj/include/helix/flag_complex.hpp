#pragma once

// The edge-compressing disk complex, stored as the graph whose clique
// complex it is. Vertices are chords; two are adjacent iff the chords are
// T1-disjoint.

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "helix/chords.hpp"

namespace helix {

using VertexSet = boost::dynamic_bitset<>;

/// Simple undirected graph. Every vertex carries an id; subgraphs keep the
/// ids of the graph they were cut from so certificates can refer back to it.
class CompatibilityGraph {
 public:
  CompatibilityGraph() = default;
  explicit CompatibilityGraph(int n);
  explicit CompatibilityGraph(std::vector<int> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  int id(int local) const { return ids_.at(local); }
  const std::vector<int>& ids() const { return ids_; }

  bool adjacent(int i, int j) const { return adj_.at(i).test(j); }
  void connect(int i, int j);
  const VertexSet& neighbors(int i) const { return adj_.at(i); }
  int degree(int i) const { return static_cast<int>(adj_.at(i).count()); }
  std::size_t edge_count() const;

  /// Subgraph on the given local vertices, in the given order.
  CompatibilityGraph induced(const std::vector<int>& local) const;
  CompatibilityGraph complement() const;

 private:
  std::vector<int> ids_;
  std::vector<VertexSet> adj_;
};

struct FlagComplex {
  CompatibilityGraph graph;
  /// Chord behind each vertex: V chords in family order, then W chords.
  std::vector<Chord> chords;

  bool empty() const { return graph.empty(); }
};

FlagComplex build_complex(const ChordFamilies& f);

/// The complex of a loop of any length; triangles and quads give the empty
/// complex since they meet every edge at most once.
FlagComplex build_complex(const NormalLoop& loop);

/// Sorted list of local vertex indices.
using Simplex = std::vector<int>;

/// Simplex budget from HELIX_CAPACITY, or 2'000'000 when unset.
std::size_t default_capacity();

/// All cliques with at most max_dim + 1 vertices, ordered by dimension and
/// then lexicographically. Throws CapacityExceeded past `capacity` simplices.
std::vector<Simplex> enumerate_simplices(const CompatibilityGraph& g, int max_dim,
                                         std::size_t capacity = default_capacity());

/// Every clique, up to the clique number.
std::vector<Simplex> enumerate_simplices(const CompatibilityGraph& g,
                                         std::size_t capacity = default_capacity());

bool is_clique(const CompatibilityGraph& g, const std::vector<int>& vertices);

/// Backtracking isomorphism test with degree pruning; fine at the sizes the
/// disk complexes reach.
bool isomorphic(const CompatibilityGraph& a, const CompatibilityGraph& b);

}  // namespace helix
