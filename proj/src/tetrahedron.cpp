#include "helix/tetrahedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace helix {
namespace {

constexpr std::array<std::array<int, 2>, kEdgeCount> kEdges{{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr std::array<std::array<int, 3>, kFaceCount> kFaces{{
    {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

void check_vertex(int v) {
  if (v < 0 || v >= kVertexCount) {
    throw std::out_of_range("tetrahedron vertex out of range");
  }
}

}  // namespace

int NormalArcType::index() const {
  const auto verts = tet::face_vertices(face);
  const auto it = std::find(verts.begin(), verts.end(), corner);
  if (it == verts.end()) {
    throw std::invalid_argument("arc corner is not a vertex of its face");
  }
  return 3 * face.value + static_cast<int>(it - verts.begin());
}

NormalArcType NormalArcType::from_index(int index) {
  if (index < 0 || index >= kArcTypeCount) {
    throw std::out_of_range("normal arc type index out of range");
  }
  const FaceId f{index / 3};
  return {f, tet::face_vertices(f)[index % 3]};
}

std::array<EdgeId, 2> NormalArcType::edges() const {
  std::array<int, 2> others{};
  int n = 0;
  for (int v : tet::face_vertices(face)) {
    if (v != corner) others[n++] = v;
  }
  std::array<EdgeId, 2> out{tet::edge_between(corner, others[0]),
                            tet::edge_between(corner, others[1])};
  std::sort(out.begin(), out.end());
  return out;
}

namespace tet {

std::array<int, 2> edge_vertices(EdgeId e) { return kEdges.at(e.value); }

EdgeId edge_between(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("edge needs two distinct vertices");
  if (a > b) std::swap(a, b);
  for (int i = 0; i < kEdgeCount; ++i) {
    if (kEdges[i][0] == a && kEdges[i][1] == b) return EdgeId{i};
  }
  throw std::logic_error("unreachable edge lookup");
}

std::array<int, 3> face_vertices(FaceId f) { return kFaces.at(f.value); }

FaceId face_opposite(int v) {
  check_vertex(v);
  return FaceId{3 - v};
}

std::array<EdgeId, 3> face_edges(FaceId f) {
  const auto [a, b, c] = face_vertices(f);
  return {edge_between(a, b), edge_between(a, c), edge_between(b, c)};
}

std::array<FaceId, 2> edge_faces(EdgeId e) {
  std::array<FaceId, 2> out{};
  int n = 0;
  for (int f = 0; f < kFaceCount; ++f) {
    if (face_contains(FaceId{f}, e)) out[n++] = FaceId{f};
  }
  return out;
}

bool face_contains(FaceId f, EdgeId e) {
  const auto verts = face_vertices(f);
  const auto [a, b] = edge_vertices(e);
  return std::find(verts.begin(), verts.end(), a) != verts.end() &&
         std::find(verts.begin(), verts.end(), b) != verts.end();
}

EdgeId opposite_edge(EdgeId e) { return EdgeId{kEdgeCount - 1 - e.value}; }

int shared_vertex(EdgeId a, EdgeId b) {
  const auto va = edge_vertices(a);
  const auto vb = edge_vertices(b);
  for (int x : va) {
    if (x == vb[0] || x == vb[1]) return (a == b) ? -1 : x;
  }
  return -1;
}

const std::vector<Permutation>& symmetries() {
  static const std::vector<Permutation> all = [] {
    std::vector<Permutation> out;
    Permutation p{0, 1, 2, 3};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out{};
  for (int v = 0; v < kVertexCount; ++v) out[v] = outer[inner[v]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out{};
  for (int v = 0; v < kVertexCount; ++v) out[p[v]] = v;
  return out;
}

EdgeId apply(const Permutation& p, EdgeId e) {
  const auto [a, b] = edge_vertices(e);
  return edge_between(p[a], p[b]);
}

FaceId apply(const Permutation& p, FaceId f) {
  // A face is determined by the vertex it misses.
  const auto verts = face_vertices(f);
  int missing = 6 - verts[0] - verts[1] - verts[2];
  return face_opposite(p[missing]);
}

NormalArcType apply(const Permutation& p, NormalArcType t) {
  return {apply(p, t.face), p[t.corner]};
}

std::string edge_name(EdgeId e) {
  const auto [a, b] = edge_vertices(e);
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace tet
}  // namespace helix
