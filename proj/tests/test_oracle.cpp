#include <set>

#include "doctest.h"
#include "helix/errors.hpp"
#include "helix/normal_curves.hpp"
#include "helix/oracle.hpp"

using namespace helix;

namespace {

std::vector<int> edge_word(const NormalLoop& l) {
  std::vector<int> w;
  for (const auto& c : l.traversal) w.push_back(c.edge.value);
  return w;
}

}  // namespace

TEST_CASE("oracle loop counts") {
  const auto loops = oracle::oracle_loops(12);
  REQUIRE(loops.size() == 4);
  CHECK(loops[0].length() == 3);
  CHECK(loops[0].labeled_count == 4);
  CHECK(loops[1].length() == 4);
  CHECK(loops[1].labeled_count == 3);
  CHECK(loops[2].length() == 8);
  CHECK(loops[3].length() == 12);
  for (const auto& l : oracle::oracle_loops(7)) CHECK(l.length() <= 4);
  CHECK_THROWS_AS(oracle::oracle_loops(25), BadParameters);
}

TEST_CASE("oracle and engine agree on loop orbits") {
  const auto oracle_loops = oracle::oracle_loops(16);
  std::set<std::vector<int>> oracle_words, engine_words;
  for (const auto& l : oracle_loops) oracle_words.insert(l.word);
  int labeled = 0;
  for (const auto& l : oracle_loops) labeled += l.labeled_count;
  const auto engine = enumerate_loops(16);
  for (const auto& l : engine) engine_words.insert(oracle::canonical_word(edge_word(l)));
  CHECK(oracle_words == engine_words);
  CHECK(labeled == static_cast<int>(enumerate_labeled_loops(16).size()));
}

TEST_CASE("canonical words") {
  const std::vector<int> w{0, 3, 5, 2};
  CHECK(oracle::cyclic_canonical_word(w) == oracle::cyclic_canonical_word({2, 5, 3, 0}));
  CHECK(oracle::cyclic_canonical_word(w) == oracle::cyclic_canonical_word({3, 5, 2, 0}));
  CHECK(oracle::canonical_word(w) == oracle::canonical_word({1, 3, 4, 2}));
}

TEST_CASE("GF(2) Betti numbers") {
  CHECK(oracle::oracle_betti_f2({}) == std::vector<long long>{0});
  CHECK(oracle::oracle_betti_f2({{0}, {1}}) == std::vector<long long>{1});
  CHECK(oracle::oracle_betti_f2({{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}}) ==
        std::vector<long long>{0, 1});
  CHECK(oracle::oracle_betti_f2({{0}, {1}, {0, 1}}) == std::vector<long long>{0, 0});
  CHECK_THROWS_AS(oracle::oracle_betti_f2({{0}, {1}, {2}}, 2), CapacityExceeded);
}

TEST_CASE("circle walk disjointness") {
  CHECK(oracle::oracle_disjoint({3, 11}, {4, 10}, 12));
  CHECK_FALSE(oracle::oracle_disjoint({3, 11}, {1, 5}, 12));
  CHECK(oracle::oracle_disjoint({5, 9}, {1, 5}, 12));
}

TEST_CASE("exhaustive clique subsets") {
  const std::vector<std::vector<bool>> path{{false, true, false}, {true, false, true}, {false, true, false}};
  const auto s = oracle::oracle_clique_subsets(path);
  CHECK(s.size() == 5);
}

TEST_CASE("reports") {
  CHECK(oracle::make_report("x", "1", "1").agree);
  CHECK_FALSE(oracle::make_report("x", "1", "2").agree);
}
