#include <algorithm>
#include <set>

#include "doctest.h"
#include "helix/chords.hpp"
#include "helix/errors.hpp"

using namespace helix;

namespace {

std::set<std::pair<int, int>> pairs(const std::vector<Chord>& family) {
  std::set<std::pair<int, int>> out;
  for (const auto& c : family) out.insert({c.a, c.b});
  return out;
}

const std::vector<NormalLoop>& catalog() {
  static const auto loops = enumerate_loops(40);
  return loops;
}

}  // namespace

TEST_CASE("chord construction") {
  const Chord c(11, 3, Side::V);
  CHECK(c.a == 3);
  CHECK(c.b == 11);
  CHECK_THROWS_AS(Chord(4, 4, Side::W), BadParameters);
}

TEST_CASE("synthetic 12-gon") {
  const auto f = synthetic_chords(3, 2);
  CHECK(pairs(f.V) == std::set<std::pair<int, int>>{{3, 11}, {4, 10}, {5, 9}});
  CHECK(pairs(f.W) == std::set<std::pair<int, int>>{{1, 5}, {6, 12}, {7, 11}});
  CHECK(chord_free_points(f) == std::vector<int>{2, 8});
  CHECK(offset_of(f) == 2);
}

TEST_CASE("synthetic octagon") {
  const auto f = synthetic_chords(2, 2);
  REQUIRE(f.V.size() == 1);
  REQUIRE(f.W.size() == 1);
  CHECK(pairs(f.V) == std::set<std::pair<int, int>>{{3, 7}});
  CHECK_FALSE(t1_disjoint(f.V[0], f.W[0]));
  const auto info = offset_info(f);
  CHECK(info.offset == 2);
  CHECK(info.degenerate);
}

TEST_CASE("synthetic parameter checks") {
  CHECK_THROWS_AS(synthetic_chords(1, 0), BadParameters);
  CHECK_THROWS_AS(synthetic_chords(2, 0), BadParameters);
  CHECK_THROWS_AS(synthetic_chords(3, 3), BadParameters);
  CHECK_THROWS_AS(synthetic_chords(4, -1), BadParameters);
}

TEST_CASE("offset round trip") {
  for (int k = 3; k <= 10; ++k) {
    for (int o = 0; o < k; ++o) {
      const auto f = synthetic_chords(k, o);
      CHECK(f.V.size() == static_cast<std::size_t>(2 * k - 3));
      CHECK(f.W.size() == static_cast<std::size_t>(2 * k - 3));
      CHECK(offset_of(f) == o);
    }
  }
}

TEST_CASE("interleaving") {
  CHECK(t1_disjoint(Chord(3, 11, Side::V), Chord(4, 10, Side::V)));
  CHECK_FALSE(t1_disjoint(Chord(3, 11, Side::V), Chord(5, 1, Side::W)));
  CHECK(t1_disjoint(Chord(5, 9, Side::V), Chord(5, 1, Side::W)));
  CHECK(t1_disjoint(Chord(1, 2, Side::V), Chord(3, 4, Side::W)));
}

TEST_CASE("chords of enumerated loops") {
  const auto& loops = catalog();
  CHECK_THROWS_AS(chords_from_loop(loops[0]), NotSpiral);
  CHECK_THROWS_AS(chords_from_loop(loops[1]), NotSpiral);

  const auto octagon = chords_from_loop(loops[2]);
  CHECK(octagon.k == 2);
  CHECK(octagon.V.size() == 1);
  CHECK(octagon.W.size() == 1);
  CHECK(offset_of(octagon) == 2);

  const auto twelve = chords_from_loop(loops[3]);
  CHECK(twelve.V.size() == 3);
  CHECK(twelve.W.size() == 3);
  CHECK(offset_of(twelve) == 2);
  CHECK(find_relabeling(twelve, synthetic_chords(3, 2)).has_value());

  std::set<int> twenty;
  for (const auto& l : loops) {
    if (l.length() == 20) twenty.insert(offset_of(chords_from_loop(l)));
  }
  CHECK(twenty == std::set<int>{2, 4});
}

TEST_CASE("every chord joins adjacent crossings of one edge") {
  for (const auto& l : catalog()) {
    if (l.length() <= 4) continue;
    const auto f = chords_from_loop(l);
    CHECK(f.labeling.n_points == l.length());
    for (const Side s : {Side::V, Side::W}) {
      for (const auto& c : f.family(s)) {
        REQUIRE(c.source);
        CHECK(f.labeling.edge_of[c.a - 1] == c.source->edge);
        CHECK(f.labeling.edge_of[c.b - 1] == c.source->edge);
      }
      // Chords of one family never cross.
      const auto& fam = f.family(s);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) CHECK(t1_disjoint(fam[i], fam[j]));
      }
    }
  }
}

TEST_CASE("relabeling") {
  const auto f = synthetic_chords(6, 2);
  const DihedralMap m{f.labeling.n_points, 5, true};
  const auto g = relabel(f, m);
  CHECK(offset_of(g) == 2);
  CHECK(find_relabeling(f, g).has_value());
  CHECK_FALSE(find_relabeling(f, synthetic_chords(6, 4)).has_value());
}

TEST_CASE("central points need two runs of three") {
  std::vector<Chord> lonely{Chord(1, 2, Side::V)};
  CHECK_THROWS_AS(central_points(lonely, 12), MalformedFamilies);
}
