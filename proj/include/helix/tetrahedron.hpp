#pragma once

// Fixed combinatorial model of a single tetrahedron: labelled vertices,
// edges, faces, their incidences, and the action of the symmetric group S4.
//
// Encodings are canonical and sorted so that everything downstream has a
// deterministic order:
//   edges  0..5 = {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}
//   faces  0..3 = {0,1,2} {0,1,3} {0,2,3} {1,2,3}
//   normal arc types 0..11 = 3 * face + (position of the cut-off corner
//   within the sorted face triple)

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace helix {

inline constexpr int kVertexCount = 4;
inline constexpr int kEdgeCount = 6;
inline constexpr int kFaceCount = 4;
inline constexpr int kArcTypeCount = 12;

struct EdgeId {
  int value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

struct FaceId {
  int value = 0;
  auto operator<=>(const FaceId&) const = default;
};

/// A normal arc type: the arc in `face` that cuts off the corner `corner`,
/// equivalently the arc joining the two edges of `face` that meet at `corner`.
struct NormalArcType {
  FaceId face;
  int corner = 0;
  auto operator<=>(const NormalArcType&) const = default;

  int index() const;
  static NormalArcType from_index(int index);
  /// The two edges this arc connects, sorted.
  std::array<EdgeId, 2> edges() const;
};

/// A vertex permutation; perm[v] is the image of vertex v.
using Permutation = std::array<int, kVertexCount>;

namespace tet {

std::array<int, 2> edge_vertices(EdgeId e);
EdgeId edge_between(int a, int b);
std::array<int, 3> face_vertices(FaceId f);
/// Face opposite to (not containing) vertex v.
FaceId face_opposite(int v);
std::array<EdgeId, 3> face_edges(FaceId f);
std::array<FaceId, 2> edge_faces(EdgeId e);
bool face_contains(FaceId f, EdgeId e);
/// The unique edge sharing no vertex with e.
EdgeId opposite_edge(EdgeId e);
/// Shared vertex of two distinct edges, or -1 for an opposite pair.
int shared_vertex(EdgeId a, EdgeId b);

/// All 24 vertex permutations in lexicographic order; the identity is first.
const std::vector<Permutation>& symmetries();

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);

EdgeId apply(const Permutation& p, EdgeId e);
FaceId apply(const Permutation& p, FaceId f);
NormalArcType apply(const Permutation& p, NormalArcType t);

std::string edge_name(EdgeId e);

}  // namespace tet
}  // namespace helix
