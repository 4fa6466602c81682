#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "helix/errors.hpp"
#include "helix/normal_curves.hpp"

using namespace helix;

namespace {

ArcCoordinates arcs(std::initializer_list<int> types) {
  ArcCoordinates c{};
  for (int t : types) ++c[t];
  return c;
}

}  // namespace

TEST_CASE("edge weights and the matching equations") {
  const ArcCoordinates link0 = arcs({0, 3, 6});
  CHECK(satisfies_matching(link0));
  CHECK(edge_weights(link0) == EdgeWeights{1, 1, 1, 0, 0, 0});
  CHECK(coordinates_from_weights(edge_weights(link0)) == link0);

  const ArcCoordinates broken = arcs({0});
  CHECK_FALSE(satisfies_matching(broken));
  CHECK_THROWS_AS(edge_weights(broken), std::invalid_argument);
  // Odd face perimeter.
  CHECK_FALSE(coordinates_from_weights(EdgeWeights{1, 0, 0, 0, 0, 0}).has_value());
  // Triangle inequality.
  CHECK_FALSE(coordinates_from_weights(EdgeWeights{2, 0, 0, 0, 0, 0}).has_value());
}

TEST_CASE("small loops") {
  CHECK_THROWS_AS(enumerate_loops(2), BadParameters);
  const auto three = enumerate_labeled_loops(3);
  CHECK(three.size() == 4);
  for (const auto& l : three) CHECK(std::holds_alternative<VertexLink>(classify_loop(l)));

  const auto four = enumerate_labeled_loops(4);
  CHECK(four.size() == 7);
  CHECK(std::count_if(four.begin(), four.end(), [](const NormalLoop& l) { return l.length() == 4; }) == 3);

  const auto orbits = enumerate_loops(4);
  REQUIRE(orbits.size() == 2);
  CHECK(orbit_size(orbits[0].coords) == 4);
  CHECK(orbit_size(orbits[1].coords) == 3);
}

TEST_CASE("no loops of length 5, 6 or 7") {
  for (const auto& l : enumerate_labeled_loops(7)) CHECK(l.length() <= 4);
}

TEST_CASE("classification examples") {
  const auto link = realize_loop(arcs({0, 3, 6}));
  REQUIRE(link);
  const auto cls = classify_loop(*link);
  REQUIRE(std::holds_alternative<VertexLink>(cls));
  CHECK(std::get<VertexLink>(cls).vertex == 0);

  // Misses {0,1} and {2,3}.
  const auto quad = realize_loop(arcs({2, 5, 6, 9}));
  REQUIRE(quad);
  CHECK(quad->length() == 4);
  const auto q = classify_loop(*quad);
  REQUIRE(std::holds_alternative<EdgePairQuad>(q));
  CHECK(std::get<EdgePairQuad>(q).edges == std::array{EdgeId{0}, EdgeId{5}});

  for (const auto& l : enumerate_loops(12)) {
    if (l.length() == 12) {
      const auto s = classify_loop(l);
      REQUIRE(std::holds_alternative<Spiral>(s));
      CHECK(std::get<Spiral>(s).k == 3);
    }
  }
}

TEST_CASE("catalog up to length 40") {
  const auto loops = enumerate_loops(40);
  std::map<int, int> by_length;
  for (const auto& l : loops) {
    ++by_length[l.length()];
    CHECK((l.length() == 3 || l.length() == 4 || l.length() % 4 == 0));
    CHECK(canonical_coordinates(l.coords) == l.coords);
    CHECK(component_count(l.coords) == 1);
    if (l.length() >= 4) {
      const auto w = l.weights();
      for (int e = 0; e < kEdgeCount; ++e) CHECK(w[e] == w[5 - e]);
    }
  }
  for (int k = 2; k <= 10; ++k) CHECK(by_length[4 * k] >= 1);
  CHECK(std::is_sorted(loops.begin(), loops.end(), [](const NormalLoop& a, const NormalLoop& b) {
    return std::pair(a.length(), a.coords) < std::pair(b.length(), b.coords);
  }));
}

TEST_CASE("traversal is a closed embedded walk") {
  for (const auto& l : enumerate_loops(24)) {
    std::set<Crossing> seen(l.traversal.begin(), l.traversal.end());
    CHECK(seen.size() == l.traversal.size());
    CHECK(l.arcs.size() == l.traversal.size());
    ArcCoordinates count{};
    for (std::size_t i = 0; i < l.arcs.size(); ++i) {
      const auto ends = l.arcs[i].edges();
      const EdgeId from = l.traversal[i].edge;
      const EdgeId to = l.traversal[(i + 1) % l.traversal.size()].edge;
      CHECK(((ends[0] == from && ends[1] == to) || (ends[0] == to && ends[1] == from)));
      ++count[l.arcs[i].index()];
    }
    CHECK(count == l.coords);
    const auto w = l.weights();
    for (const auto& c : l.traversal) CHECK(c.position < w[c.edge.value]);
  }
}

TEST_CASE("two-component systems do not realize a loop") {
  ArcCoordinates two = arcs({0, 3, 6});
  for (int& x : two) x *= 2;
  CHECK(component_count(two) == 2);
  CHECK_FALSE(realize_loop(two).has_value());
}

TEST_CASE("hemispheres") {
  SUBCASE("quad: one whole edge per side") {
    const auto quad = *realize_loop(arcs({2, 5, 6, 9}));
    const auto hs = hemispheres(quad);
    for (const auto& h : hs) {
      CHECK(h.vertices.size() == 2);
      CHECK(std::count_if(h.sub_edges.begin(), h.sub_edges.end(),
                          [](const SubEdge& s) { return s.weight == 0; }) == 1);
      CHECK(h.interior_sub_edge_count() == 0);
    }
  }
  SUBCASE("spirals: 2k-3 interior sub-edges per side and a partition") {
    for (const auto& l : enumerate_loops(40)) {
      if (l.length() < 8) continue;
      const int k = l.length() / 4;
      const auto hs = hemispheres(l);
      std::set<std::pair<int, int>> seen;
      for (const auto& h : hs) {
        CHECK(h.interior_sub_edge_count() == 2 * k - 3);
        CHECK(h.vertices.size() == 2);
        for (const auto& s : h.sub_edges) CHECK(seen.insert({s.edge.value, s.index}).second);
      }
      std::size_t total = 0;
      for (int w : l.weights()) total += w + 1;
      CHECK(seen.size() == total);
      CHECK(std::find(hs[0].vertices.begin(), hs[0].vertices.end(), 0) != hs[0].vertices.end());
    }
  }
}
