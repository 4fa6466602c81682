#pragma once

// Normal loops on the boundary of the tetrahedron.
//
// A normal curve system is recorded by its arc coordinates: how many arcs of
// each of the 12 normal arc types it contains. Each coordinate vector that
// satisfies the edge-matching equations has a unique embedded realization up
// to isotopy (arcs of one type are parallel and nested toward their corner),
// which is what realize() builds.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "helix/tetrahedron.hpp"

namespace helix {

using ArcCoordinates = std::array<int, kArcTypeCount>;
using EdgeWeights = std::array<int, kEdgeCount>;

/// A point where the curve crosses an edge. `position` counts from the
/// lower-labelled endpoint of the edge, starting at 0.
struct Crossing {
  EdgeId edge;
  int position = 0;
  auto operator<=>(const Crossing&) const = default;
};

struct NormalLoop {
  ArcCoordinates coords{};
  /// Crossings in traversal order. The arc joining traversal[i] to
  /// traversal[i+1] (cyclically) is arcs[i].
  std::vector<Crossing> traversal;
  std::vector<NormalArcType> arcs;

  int length() const { return static_cast<int>(traversal.size()); }
  EdgeWeights weights() const;
};

bool satisfies_matching(const ArcCoordinates& coords);

/// Number of crossings on each edge. Throws std::invalid_argument when the
/// matching equations fail.
EdgeWeights edge_weights(const ArcCoordinates& coords);

/// Inverse of edge_weights(): the corner counts of each face. Returns nullopt
/// when the weights violate a triangle inequality or a face has odd total.
std::optional<ArcCoordinates> coordinates_from_weights(const EdgeWeights& w);

ArcCoordinates apply(const Permutation& p, const ArcCoordinates& coords);

/// Lexicographically smallest image of `coords` under the 24 symmetries.
ArcCoordinates canonical_coordinates(const ArcCoordinates& coords);

/// Number of distinct images of `coords` under the 24 symmetries.
int orbit_size(const ArcCoordinates& coords);

/// Number of connected components of the realized curve system.
int component_count(const ArcCoordinates& coords);

/// Realizes `coords` and returns the loop, or nullopt when the realized
/// system is empty or has more than one component. The traversal starts at
/// the smallest crossing and proceeds toward the smaller of its neighbours.
std::optional<NormalLoop> realize_loop(const ArcCoordinates& coords);

/// Every connected normal loop of length <= max_length, one per symmetry
/// orbit, as the realization of its canonical coordinates. Sorted by
/// (length, coords); the position in this list is the stable loop id.
std::vector<NormalLoop> enumerate_loops(int max_length);

/// Every labelled loop (no symmetry reduction) of length <= max_length,
/// sorted by (length, coords).
std::vector<NormalLoop> enumerate_labeled_loops(int max_length);

struct VertexLink {
  int vertex = 0;
};
struct EdgePairQuad {
  /// The two edges the quad separates, i.e. the edges it misses.
  std::array<EdgeId, 2> edges{};
};
struct Spiral {
  int k = 0;
};
using LoopClass = std::variant<VertexLink, EdgePairQuad, Spiral>;

std::string class_name(const LoopClass& c);

/// A segment of an edge cut out by the crossings of a loop. Segment `index`
/// runs from crossing index-1 to crossing index; -1 and weight stand for the
/// lower and upper vertex of the edge.
struct SubEdge {
  EdgeId edge;
  int index = 0;
  int weight = 0;
  int side = 0;

  int lower_crossing() const { return index - 1; }
  int upper_crossing() const { return index; }
  bool starts_at_vertex() const { return index == 0; }
  bool ends_at_vertex() const { return index == weight; }
  /// Both endpoints on the curve.
  bool interior() const { return !starts_at_vertex() && !ends_at_vertex(); }
};

struct Hemisphere {
  int side = 0;
  std::vector<int> vertices;
  std::vector<SubEdge> sub_edges;

  int interior_sub_edge_count() const;
};

/// Splits the sub-edges of the 1-skeleton by the component of the sphere
/// minus the loop they lie in. Side 0 is the component containing vertex 0.
std::array<Hemisphere, 2> hemispheres(const NormalLoop& loop);

/// Side (0 or 1) of every sub-edge, indexed [edge][segment].
std::array<std::vector<int>, kEdgeCount> sub_edge_sides(const NormalLoop& loop);

/// Throws MalformedLoop when the hemisphere structure matches no case.
LoopClass classify_loop(const NormalLoop& loop);

}  // namespace helix
