// Randomized checks of the engines against the brute-force references.

#include <algorithm>
#include <random>

#include "doctest.h"
#include "helix/oracle.hpp"
#include "helix/topology.hpp"

using namespace helix;

namespace {

CompatibilityGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  CompatibilityGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.connect(i, j);
    }
  }
  return g;
}

// GF(2) Betti numbers predicted from integral homology by universal
// coefficients: each even torsion coefficient adds one in its own
// dimension and the one above.
std::vector<long long> f2_from_integral(const HomologyProfile& h) {
  std::vector<long long> out(h.betti.begin(), h.betti.end());
  out.resize(std::max(out.size(), h.torsion.size() + 1), 0);
  for (std::size_t d = 0; d < h.torsion.size(); ++d) {
    for (const auto& t : h.torsion[d]) {
      if (t % 2 == 0) {
        ++out[d];
        ++out[d + 1];
      }
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long long> trimmed(std::vector<long long> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("random flag complexes") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> size(1, 11);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_graph(rng, size(rng), density(rng));
    const auto simplices = enumerate_simplices(g);

    std::vector<std::vector<bool>> adj(g.size(), std::vector<bool>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g.size(); ++j) adj[i][j] = i != j && g.adjacent(i, j);
    }
    auto brute = oracle::oracle_clique_subsets(adj);
    auto sorted = simplices;
    std::sort(sorted.begin(), sorted.end());
    std::sort(brute.begin(), brute.end());
    CHECK(sorted == brute);

    const auto h = reduced_homology(simplices);
    CHECK(f2_from_integral(h) == trimmed(oracle::oracle_betti_f2(simplices)));

    long long euler = 0;
    for (std::size_t d = 0; d < h.betti.size(); ++d) euler += (d % 2 ? -1 : 1) * h.betti[d];
    CHECK(euler == reduced_euler_characteristic(simplices));

    const auto trace = strong_collapse(g, rng);
    CHECK(audit_collapse(g, trace));
    CHECK(homology(trace.core) == h);
    CHECK(isomorphic(trace.core, strong_collapse(g).core));
  }
}

TEST_CASE("random chord pairs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 40)(rng);
    std::uniform_int_distribution<int> point(1, n);
    int a = point(rng), b = point(rng), c = point(rng), d = point(rng);
    if (a == b || c == d) continue;
    CHECK(t1_disjoint(Chord(a, b, Side::V), Chord(c, d, Side::W)) == oracle::oracle_disjoint({a, b}, {c, d}, n));
  }
}

TEST_CASE("canonical coordinates are orbit invariants") {
  std::mt19937_64 rng(5);
  const auto& g = tet::symmetries();
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (const auto& l : enumerate_labeled_loops(20)) {
    const auto p = g[pick(rng)];
    const auto image = apply(p, l.coords);
    CHECK(satisfies_matching(image));
    CHECK(canonical_coordinates(image) == canonical_coordinates(l.coords));
    CHECK(orbit_size(image) == orbit_size(l.coords));
  }
}

TEST_CASE("random relabelings keep the offset") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = std::uniform_int_distribution<int>(3, 10)(rng);
    const int o = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const auto f = synthetic_chords(k, o);
    const DihedralMap m{4 * k, std::uniform_int_distribution<int>(0, 4 * k - 1)(rng),
                        std::bernoulli_distribution(0.5)(rng)};
    const auto moved = relabel(f, m);
    CHECK(offset_of(moved) == o);
    CHECK(find_relabeling(moved, f).has_value());
  }
}
