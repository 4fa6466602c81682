#include "helix/normal_curves.hpp"

#include <algorithm>
#include <stdexcept>

#include "helix/errors.hpp"

namespace helix {
namespace {

int coord(const ArcCoordinates& c, FaceId f, int corner) {
  return c[NormalArcType{f, corner}.index()];
}

// Crossings of a realized system, indexed globally: edge by edge, then by
// position along the edge.
struct Realization {
  EdgeWeights weights{};
  std::array<int, kEdgeCount> first{};
  int total = 0;
  // For each crossing, its partner across each of the two faces of its edge
  // (slot order follows tet::edge_faces) and the type of the joining arc.
  std::vector<std::array<int, 2>> partner;
  std::vector<std::array<NormalArcType, 2>> arc;

  int id(EdgeId e, int pos) const { return first[e.value] + pos; }

  Crossing crossing(int id) const {
    int e = kEdgeCount - 1;
    while (first[e] > id || weights[e] == 0) --e;
    return {EdgeId{e}, id - first[e]};
  }
};

int face_slot(EdgeId e, FaceId f) {
  const auto faces = tet::edge_faces(e);
  return faces[0] == f ? 0 : 1;
}

// Position of the crossing `distance` steps from vertex v along edge {v,u}.
int position_from(int v, int u, int distance, int weight) {
  return v < u ? distance : weight - 1 - distance;
}

Realization realize(const ArcCoordinates& coords) {
  Realization r;
  r.weights = edge_weights(coords);
  for (int e = 0; e < kEdgeCount; ++e) {
    r.first[e] = r.total;
    r.total += r.weights[e];
  }
  r.partner.assign(r.total, {-1, -1});
  r.arc.resize(r.total);

  for (int f = 0; f < kFaceCount; ++f) {
    const FaceId face{f};
    const auto verts = tet::face_vertices(face);
    for (int corner : verts) {
      std::array<int, 2> others{};
      int n = 0;
      for (int v : verts) {
        if (v != corner) others[n++] = v;
      }
      const EdgeId e1 = tet::edge_between(corner, others[0]);
      const EdgeId e2 = tet::edge_between(corner, others[1]);
      const NormalArcType type{face, corner};
      for (int i = 0; i < coord(coords, face, corner); ++i) {
        const int p = r.id(e1, position_from(corner, others[0], i, r.weights[e1.value]));
        const int q = r.id(e2, position_from(corner, others[1], i, r.weights[e2.value]));
        const int sp = face_slot(e1, face);
        const int sq = face_slot(e2, face);
        if (r.partner[p][sp] != -1 || r.partner[q][sq] != -1) {
          throw std::logic_error("normal arc realization assigned a crossing twice");
        }
        r.partner[p][sp] = q;
        r.partner[q][sq] = p;
        r.arc[p][sp] = type;
        r.arc[q][sq] = type;
      }
    }
  }
  return r;
}

// Walks the component containing `start`, leaving it through face slot
// `first_slot`. Returns the visited crossing ids and the arcs between them.
std::pair<std::vector<int>, std::vector<NormalArcType>> walk(const Realization& r, int start,
                                                            int first_slot) {
  std::vector<int> ids;
  std::vector<NormalArcType> arcs;
  int current = start;
  int slot = first_slot;
  do {
    ids.push_back(current);
    arcs.push_back(r.arc[current][slot]);
    const int next = r.partner[current][slot];
    // Arrive through the face we left by, leave through the other one.
    const Crossing c = r.crossing(next);
    const Crossing from = r.crossing(current);
    const FaceId via = tet::edge_faces(from.edge)[slot];
    slot = 1 - face_slot(c.edge, via);
    current = next;
  } while (current != start);
  return {ids, arcs};
}

}  // namespace

EdgeWeights NormalLoop::weights() const {
  EdgeWeights w{};
  for (const auto& c : traversal) ++w[c.edge.value];
  return w;
}

bool satisfies_matching(const ArcCoordinates& coords) {
  for (int e = 0; e < kEdgeCount; ++e) {
    const EdgeId edge{e};
    const auto [a, b] = tet::edge_vertices(edge);
    const auto faces = tet::edge_faces(edge);
    const int lhs = coord(coords, faces[0], a) + coord(coords, faces[0], b);
    const int rhs = coord(coords, faces[1], a) + coord(coords, faces[1], b);
    if (lhs != rhs) return false;
  }
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

EdgeWeights edge_weights(const ArcCoordinates& coords) {
  if (!satisfies_matching(coords)) {
    throw std::invalid_argument("arc coordinates violate the edge-matching equations");
  }
  EdgeWeights w{};
  for (int e = 0; e < kEdgeCount; ++e) {
    const EdgeId edge{e};
    const auto [a, b] = tet::edge_vertices(edge);
    const FaceId f = tet::edge_faces(edge)[0];
    w[e] = coord(coords, f, a) + coord(coords, f, b);
  }
  return w;
}

std::optional<ArcCoordinates> coordinates_from_weights(const EdgeWeights& w) {
  ArcCoordinates out{};
  for (int f = 0; f < kFaceCount; ++f) {
    const FaceId face{f};
    const auto verts = tet::face_vertices(face);
    int perimeter = 0;
    for (const EdgeId e : tet::face_edges(face)) perimeter += w[e.value];
    if (perimeter % 2 != 0) return std::nullopt;
    for (int i = 0; i < 3; ++i) {
      const int v = verts[i];
      const int a = verts[(i + 1) % 3];
      const int b = verts[(i + 2) % 3];
      const int doubled = w[tet::edge_between(v, a).value] + w[tet::edge_between(v, b).value] -
                          w[tet::edge_between(a, b).value];
      if (doubled < 0) return std::nullopt;
      out[NormalArcType{face, v}.index()] = doubled / 2;
    }
  }
  return out;
}

ArcCoordinates apply(const Permutation& p, const ArcCoordinates& coords) {
  ArcCoordinates out{};
  for (int t = 0; t < kArcTypeCount; ++t) {
    out[tet::apply(p, NormalArcType::from_index(t)).index()] = coords[t];
  }
  return out;
}

ArcCoordinates canonical_coordinates(const ArcCoordinates& coords) {
  ArcCoordinates best = coords;
  for (const auto& p : tet::symmetries()) best = std::min(best, apply(p, coords));
  return best;
}

int orbit_size(const ArcCoordinates& coords) {
  std::vector<ArcCoordinates> images;
  for (const auto& p : tet::symmetries()) images.push_back(apply(p, coords));
  std::sort(images.begin(), images.end());
  return static_cast<int>(std::unique(images.begin(), images.end()) - images.begin());
}

int component_count(const ArcCoordinates& coords) {
  const Realization r = realize(coords);
  std::vector<bool> seen(r.total, false);
  int components = 0;
  for (int start = 0; start < r.total; ++start) {
    if (seen[start]) continue;
    ++components;
    for (int id : walk(r, start, 0).first) seen[id] = true;
  }
  return components;
}

std::optional<NormalLoop> realize_loop(const ArcCoordinates& coords) {
  const Realization r = realize(coords);
  if (r.total == 0) return std::nullopt;

  const int start = 0;
  const int a = r.partner[start][0];
  const int b = r.partner[start][1];
  const int first_slot = (a < b) ? 0 : 1;
  auto [ids, arcs] = walk(r, start, first_slot);
  if (static_cast<int>(ids.size()) != r.total) return std::nullopt;

  NormalLoop loop;
  loop.coords = coords;
  loop.arcs = std::move(arcs);
  loop.traversal.reserve(ids.size());
  for (int id : ids) loop.traversal.push_back(r.crossing(id));
  return loop;
}

std::vector<NormalLoop> enumerate_loops(int max_length) {
  if (max_length < 3) throw BadParameters("max_length must be at least 3");

  // Every solution of the matching equations is determined by its edge
  // weights, so the solutions with total <= max_length are enumerated
  // through the weights and checked back against the equations.
  std::vector<NormalLoop> out;
  EdgeWeights w{};
  auto visit = [&](auto&& self, int edge, int budget) -> void {
    if (edge == kEdgeCount) {
      const auto coords = coordinates_from_weights(w);
      if (!coords || !satisfies_matching(*coords)) return;
      if (canonical_coordinates(*coords) != *coords) return;
      if (auto loop = realize_loop(*coords)) out.push_back(std::move(*loop));
      return;
    }
    for (int x = 0; x <= budget; ++x) {
      w[edge] = x;
      self(self, edge + 1, budget - x);
    }
  };
  visit(visit, 0, max_length);

  std::sort(out.begin(), out.end(), [](const NormalLoop& a, const NormalLoop& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.coords < b.coords;
  });
  return out;
}

std::vector<NormalLoop> enumerate_labeled_loops(int max_length) {
  std::vector<NormalLoop> out;
  for (const auto& rep : enumerate_loops(max_length)) {
    std::vector<ArcCoordinates> images;
    for (const auto& p : tet::symmetries()) images.push_back(apply(p, rep.coords));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    for (const auto& c : images) out.push_back(*realize_loop(c));
  }
  std::sort(out.begin(), out.end(), [](const NormalLoop& a, const NormalLoop& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.coords < b.coords;
  });
  return out;
}

std::string class_name(const LoopClass& c) {
  struct {
    std::string operator()(const VertexLink&) const { return "vertex_link"; }
    std::string operator()(const EdgePairQuad&) const { return "edge_pair_quad"; }
    std::string operator()(const Spiral&) const { return "spiral"; }
  } visitor;
  return std::visit(visitor, c);
}

int Hemisphere::interior_sub_edge_count() const {
  return static_cast<int>(
      std::count_if(sub_edges.begin(), sub_edges.end(), [](const SubEdge& s) { return s.interior(); }));
}

std::array<std::vector<int>, kEdgeCount> sub_edge_sides(const NormalLoop& loop) {
  // Crossing the loop switches hemispheres, so the side of any point of the
  // 1-skeleton is the parity of the crossings on a path from vertex 0.
  const EdgeWeights w = loop.weights();
  std::array<int, kVertexCount> vertex_side{};
  for (int v = 1; v < kVertexCount; ++v) vertex_side[v] = w[tet::edge_between(0, v).value] % 2;

  std::array<std::vector<int>, kEdgeCount> sides;
  for (int e = 0; e < kEdgeCount; ++e) {
    const int lower = tet::edge_vertices(EdgeId{e})[0];
    for (int j = 0; j <= w[e]; ++j) sides[e].push_back(vertex_side[lower] ^ (j & 1));
  }
  return sides;
}

std::array<Hemisphere, 2> hemispheres(const NormalLoop& loop) {
  const EdgeWeights w = loop.weights();
  const auto sides = sub_edge_sides(loop);
  std::array<Hemisphere, 2> out;
  out[0].side = 0;
  out[1].side = 1;
  for (int v = 0; v < kVertexCount; ++v) {
    const int side = (v == 0) ? 0 : w[tet::edge_between(0, v).value] % 2;
    out[side].vertices.push_back(v);
  }
  for (int e = 0; e < kEdgeCount; ++e) {
    for (int j = 0; j <= w[e]; ++j) {
      const int side = sides[e][j];
      out[side].sub_edges.push_back(SubEdge{EdgeId{e}, j, w[e], side});
    }
  }
  return out;
}

LoopClass classify_loop(const NormalLoop& loop) {
  const int length = loop.length();
  const EdgeWeights w = loop.weights();
  const auto hemis = hemispheres(loop);

  if (length == 3) {
    for (const auto& h : hemis) {
      if (h.vertices.size() != 1) continue;
      const int v = h.vertices[0];
      bool link = true;
      for (int e = 0; e < kEdgeCount; ++e) {
        const auto [a, b] = tet::edge_vertices(EdgeId{e});
        const bool incident = (a == v || b == v);
        link = link && (w[e] == (incident ? 1 : 0));
      }
      if (link) return VertexLink{v};
    }
    throw MalformedLoop("length-3 loop is not a vertex link");
  }

  if (length == 4) {
    std::array<EdgeId, 2> missed{};
    for (int i = 0; i < 2; ++i) {
      const auto& h = hemis[i];
      if (h.vertices.size() != 2) throw MalformedLoop("quad hemisphere without two vertices");
      const EdgeId e = tet::edge_between(h.vertices[0], h.vertices[1]);
      if (w[e.value] != 0) throw MalformedLoop("quad crosses the edge inside its hemisphere");
      missed[i] = e;
    }
    std::sort(missed.begin(), missed.end());
    if (tet::opposite_edge(missed[0]) != missed[1]) {
      throw MalformedLoop("quad does not separate a pair of opposite edges");
    }
    return EdgePairQuad{missed};
  }

  if (length % 4 != 0 || length < 8) {
    throw MalformedLoop("loop length " + std::to_string(length) + " is not 3, 4 or 4k");
  }
  const int k = length / 4;
  for (const auto& h : hemis) {
    if (h.vertices.size() != 2) throw MalformedLoop("spiral hemisphere without two vertices");
    for (int v : h.vertices) {
      int meeting = 0;
      for (const auto& s : h.sub_edges) {
        const auto [a, b] = tet::edge_vertices(s.edge);
        if (s.starts_at_vertex() && s.ends_at_vertex()) {
          throw MalformedLoop("spiral misses an edge entirely");
        }
        if ((s.starts_at_vertex() && a == v) || (s.ends_at_vertex() && b == v)) ++meeting;
      }
      if (meeting != 3) throw MalformedLoop("spiral vertex without three sub-edges");
    }
    if (h.interior_sub_edge_count() != 2 * k - 3) {
      throw MalformedLoop("spiral hemisphere without 2k-3 parallel sub-edges");
    }
  }
  return Spiral{k};
}

}  // namespace helix
