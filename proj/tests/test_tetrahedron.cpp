#include <set>

#include "doctest.h"
#include "helix/tetrahedron.hpp"

using namespace helix;

namespace {

EdgeId edge(int a, int b) { return tet::edge_between(a, b); }

}  // namespace

TEST_CASE("edge and face encodings are sorted") {
  CHECK(tet::edge_vertices(EdgeId{0}) == std::array{0, 1});
  CHECK(tet::edge_vertices(EdgeId{5}) == std::array{2, 3});
  CHECK(tet::face_vertices(FaceId{2}) == std::array{0, 2, 3});
  for (int v = 0; v < kVertexCount; ++v) {
    for (int x : tet::face_vertices(tet::face_opposite(v))) CHECK(x != v);
  }
  for (int e = 0; e < kEdgeCount; ++e) {
    const auto [a, b] = tet::edge_vertices(EdgeId{e});
    CHECK(tet::edge_between(b, a) == EdgeId{e});
    for (FaceId f : tet::edge_faces(EdgeId{e})) CHECK(tet::face_contains(f, EdgeId{e}));
  }
}

TEST_CASE("opposite edges") {
  CHECK(tet::opposite_edge(edge(0, 1)) == edge(2, 3));
  CHECK(tet::opposite_edge(edge(0, 2)) == edge(1, 3));
  for (int e = 0; e < kEdgeCount; ++e) {
    CHECK(tet::opposite_edge(tet::opposite_edge(EdgeId{e})) == EdgeId{e});
    CHECK(tet::shared_vertex(EdgeId{e}, tet::opposite_edge(EdgeId{e})) == -1);
  }
  CHECK(tet::shared_vertex(edge(0, 1), edge(1, 3)) == 1);
}

TEST_CASE("arc type indices round trip") {
  for (int i = 0; i < kArcTypeCount; ++i) CHECK(NormalArcType::from_index(i).index() == i);
  const auto t = NormalArcType::from_index(2);  // face {0,1,2}, corner 2
  CHECK(t.edges() == std::array{edge(0, 2), edge(1, 2)});
}

TEST_CASE("symmetries form S4") {
  const auto& g = tet::symmetries();
  REQUIRE(g.size() == 24);
  CHECK(g.front() == Permutation{0, 1, 2, 3});
  std::set<Permutation> all(g.begin(), g.end());
  CHECK(all.size() == 24);
  for (const auto& p : g) {
    CHECK(tet::compose(p, tet::inverse(p)) == g.front());
    for (const auto& q : g) {
      CHECK(all.count(tet::compose(p, q)) == 1);
      // The action on arcs is a homomorphism.
      for (int i = 0; i < kArcTypeCount; ++i) {
        const auto t = NormalArcType::from_index(i);
        CHECK(tet::apply(tet::compose(p, q), t) == tet::apply(p, tet::apply(q, t)));
      }
    }
  }
}

TEST_CASE("transposition (0 1) acting on the arcs of face 012") {
  const Permutation swap01{1, 0, 2, 3};
  const NormalArcType corner0{FaceId{0}, 0}, corner1{FaceId{0}, 1}, corner2{FaceId{0}, 2};
  CHECK(tet::apply(swap01, corner0) == corner1);
  CHECK(tet::apply(swap01, corner1) == corner0);
  // The arc joining {0,2} and {1,2} has its endpoint edges exchanged, so as
  // an unordered type it is fixed.
  CHECK(tet::apply(swap01, corner2) == corner2);
  CHECK(tet::apply(swap01, edge(0, 2)) == edge(1, 2));
  CHECK(tet::apply(swap01, edge(1, 2)) == edge(0, 2));
}

TEST_CASE("permutations preserve incidence") {
  for (const auto& p : tet::symmetries()) {
    for (int e = 0; e < kEdgeCount; ++e) {
      CHECK(tet::apply(p, tet::opposite_edge(EdgeId{e})) == tet::opposite_edge(tet::apply(p, EdgeId{e})));
      for (int f = 0; f < kFaceCount; ++f) {
        CHECK(tet::face_contains(FaceId{f}, EdgeId{e}) ==
              tet::face_contains(tet::apply(p, FaceId{f}), tet::apply(p, EdgeId{e})));
      }
    }
  }
}
