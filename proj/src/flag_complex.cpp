#include "helix/flag_complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "helix/errors.hpp"

namespace helix {

CompatibilityGraph::CompatibilityGraph(int n) : CompatibilityGraph([n] {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}()) {}

CompatibilityGraph::CompatibilityGraph(std::vector<int> ids)
    : ids_(std::move(ids)), adj_(ids_.size(), VertexSet(ids_.size())) {}

void CompatibilityGraph::connect(int i, int j) {
  if (i == j) return;
  adj_.at(i).set(j);
  adj_.at(j).set(i);
}

std::size_t CompatibilityGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

CompatibilityGraph CompatibilityGraph::induced(const std::vector<int>& local) const {
  std::vector<int> ids;
  ids.reserve(local.size());
  for (int v : local) ids.push_back(ids_.at(v));
  CompatibilityGraph out(std::move(ids));
  for (std::size_t i = 0; i < local.size(); ++i) {
    for (std::size_t j = i + 1; j < local.size(); ++j) {
      if (adjacent(local[i], local[j])) out.connect(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

CompatibilityGraph CompatibilityGraph::complement() const {
  CompatibilityGraph out(ids_);
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!adjacent(i, j)) out.connect(i, j);
    }
  }
  return out;
}

FlagComplex build_complex(const ChordFamilies& f) {
  FlagComplex out;
  out.chords = f.V;
  out.chords.insert(out.chords.end(), f.W.begin(), f.W.end());
  out.graph = CompatibilityGraph(static_cast<int>(out.chords.size()));
  for (int i = 0; i < out.graph.size(); ++i) {
    for (int j = i + 1; j < out.graph.size(); ++j) {
      if (t1_disjoint(out.chords[i], out.chords[j])) out.graph.connect(i, j);
    }
  }
  return out;
}

FlagComplex build_complex(const NormalLoop& loop) {
  if (loop.length() <= 4) return {};
  return build_complex(chords_from_loop(loop));
}

std::size_t default_capacity() {
  if (const char* env = std::getenv("HELIX_CAPACITY")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw BadParameters(std::string("HELIX_CAPACITY is not a number: ") + env);
    }
  }
  return 2'000'000;
}

std::vector<Simplex> enumerate_simplices(const CompatibilityGraph& g, int max_dim,
                                         std::size_t capacity) {
  if (max_dim < 0) throw BadParameters("max_dim must be non-negative");
  std::vector<Simplex> out;
  auto push = [&](Simplex s) {
    if (out.size() >= capacity) {
      throw CapacityExceeded("simplex enumeration exceeds the budget of " +
                             std::to_string(capacity));
    }
    out.push_back(std::move(s));
  };

  // Level by level; extending lexicographically ordered cliques by larger
  // vertices keeps each level in lexicographic order.
  std::vector<std::pair<Simplex, VertexSet>> level;
  for (int v = 0; v < g.size(); ++v) {
    push({v});
    level.emplace_back(Simplex{v}, g.neighbors(v));
  }
  for (int dim = 1; dim <= max_dim && !level.empty(); ++dim) {
    std::vector<std::pair<Simplex, VertexSet>> next;
    for (const auto& [simplex, common] : level) {
      for (auto w = common.find_next(static_cast<std::size_t>(simplex.back()));
           w != VertexSet::npos; w = common.find_next(w)) {
        Simplex grown = simplex;
        grown.push_back(static_cast<int>(w));
        push(grown);
        next.emplace_back(std::move(grown), common & g.neighbors(static_cast<int>(w)));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Simplex> enumerate_simplices(const CompatibilityGraph& g, std::size_t capacity) {
  return enumerate_simplices(g, std::max(0, g.size() - 1), capacity);
}

bool is_clique(const CompatibilityGraph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

bool extend_isomorphism(const CompatibilityGraph& a, const CompatibilityGraph& b,
                        std::vector<int>& map, std::vector<bool>& used, int next) {
  if (next == a.size()) return true;
  for (int cand = 0; cand < b.size(); ++cand) {
    if (used[cand] || a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      ok = a.adjacent(next, prev) == b.adjacent(cand, map[prev]);
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const CompatibilityGraph& a, const CompatibilityGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.size(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.size(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  return extend_isomorphism(a, b, map, used, 0);
}

}  // namespace helix
