#include "helix/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "helix/errors.hpp"

namespace helix::oracle {
namespace {

// Own copy of the boundary combinatorics.
constexpr int kEdges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e) {
    if (kEdges[e][0] == a && kEdges[e][1] == b) return e;
  }
  throw std::logic_error("oracle: no such edge");
}

// Faces are named by their missing vertex.
bool edge_in_face(int e, int missing) { return kEdges[e][0] != missing && kEdges[e][1] != missing; }

struct Point {
  int edge;
};

// Curve under construction: crossing points ordered along each edge, arcs
// recorded per face.
struct Growth {
  std::vector<Point> points;
  std::array<std::vector<int>, 6> along;  // point ids from the lower vertex up
  std::array<std::vector<std::pair<int, int>>, 4> arcs;  // by missing vertex

  int position(int p) const {
    const auto& line = along[points[p].edge];
    return static_cast<int>(std::find(line.begin(), line.end(), p) - line.begin());
  }

  // Coordinate of point p going once around the boundary of face `missing`.
  long cyclic_coordinate(int p, int missing) const {
    int verts[3], n = 0;
    for (int v = 0; v < 4; ++v) {
      if (v != missing) verts[n++] = v;
    }
    const int e = points[p].edge;
    const int pos = position(p);
    const long span = 1000;
    if (e == edge_index(verts[0], verts[1])) return pos;
    if (e == edge_index(verts[1], verts[2])) return span + pos;
    // Third side runs from verts[2] back to verts[0]: against the edge order.
    return 2 * span + static_cast<long>(along[e].size()) - 1 - pos;
  }

  bool crosses(std::pair<int, int> x, std::pair<int, int> y, int missing) const {
    long a = cyclic_coordinate(x.first, missing), b = cyclic_coordinate(x.second, missing);
    if (a > b) std::swap(a, b);
    const long c = cyclic_coordinate(y.first, missing), d = cyclic_coordinate(y.second, missing);
    const bool c_in = a < c && c < b;
    const bool d_in = a < d && d < b;
    return c_in != d_in;
  }

  bool fits(std::pair<int, int> arc, int missing) const {
    for (const auto& other : arcs[missing]) {
      if (crosses(arc, other, missing)) return false;
    }
    return true;
  }
};

struct Search {
  int max_length;
  Growth g;
  std::vector<int> path;  // point ids in traversal order
  std::set<std::vector<int>> found;
  // Face (by missing vertex) through which the loop returns to its start.
  int closing_face;

  void record() {
    std::vector<int> word;
    for (int p : path) word.push_back(g.points[p].edge);
    found.insert(canonical_word(word));
  }

  // The current point was reached through face `arrived`; leave through the
  // other face of its edge.
  void step(int arrived) {
    const int cur = path.back();
    const int e = g.points[cur].edge;
    int out_face = -1;
    for (int m = 0; m < 4; ++m) {
      if (m != arrived && edge_in_face(e, m)) out_face = m;
    }

    for (int next_edge = 0; next_edge < 6; ++next_edge) {
      if (next_edge == e || !edge_in_face(next_edge, out_face)) continue;

      // Close up through the start point's free face.
      const int start = path.front();
      if (next_edge == g.points[start].edge && out_face == closing_face &&
          path.size() >= 3) {
        const std::pair<int, int> arc{cur, start};
        if (g.fits(arc, out_face)) record();
      }
      if (static_cast<int>(path.size()) >= max_length) continue;

      const int id = static_cast<int>(g.points.size());
      g.points.push_back({next_edge});
      auto& line = g.along[next_edge];
      for (std::size_t slot = 0; slot <= line.size(); ++slot) {
        line.insert(line.begin() + static_cast<long>(slot), id);
        const std::pair<int, int> arc{cur, id};
        if (g.fits(arc, out_face)) {
          g.arcs[out_face].push_back(arc);
          path.push_back(id);
          step(out_face);
          path.pop_back();
          g.arcs[out_face].pop_back();
        }
        line.erase(line.begin() + static_cast<long>(slot));
      }
      g.points.pop_back();
    }
  }
};

}  // namespace

std::vector<int> cyclic_canonical_word(const std::vector<int>& edges) {
  std::vector<int> best;
  const int n = static_cast<int>(edges.size());
  for (int dir : {1, -1}) {
    for (int shift = 0; shift < n; ++shift) {
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = edges[((shift + dir * i) % n + n) % n];
      if (best.empty() || w < best) best = std::move(w);
    }
  }
  return best;
}

namespace {

std::vector<std::vector<int>> labeled_images(const std::vector<int>& edges) {
  std::vector<std::vector<int>> out;
  int perm[4] = {0, 1, 2, 3};
  do {
    std::vector<int> mapped(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      mapped[i] = edge_index(perm[kEdges[edges[i]][0]], perm[kEdges[edges[i]][1]]);
    }
    out.push_back(cyclic_canonical_word(mapped));
  } while (std::next_permutation(perm, perm + 4));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<int> canonical_word(const std::vector<int>& edges) {
  return labeled_images(edges).front();
}

std::vector<OracleLoop> oracle_loops(int max_length) {
  if (max_length > 24) throw BadParameters("oracle_loops is limited to length 24");
  // Up to symmetry every loop crosses edge {0,1} and leaves its first
  // crossing there into face {0,1,2}.
  Search s{max_length, {}, {}, {}, /*closing_face*/ 2};
  if (max_length >= 3) {
    s.g.points.push_back({0});
    s.g.along[0].push_back(0);
    s.path.push_back(0);
    s.step(/*arrived through face missing*/ 2);
  }
  std::vector<OracleLoop> out;
  for (const auto& w : s.found) {
    out.push_back({w, static_cast<int>(labeled_images(w).size())});
  }
  std::sort(out.begin(), out.end(), [](const OracleLoop& a, const OracleLoop& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t rank_f2(std::vector<Bits> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows[0].size();
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t x = w; x < words; ++x) rows[r][x] ^= rows[rank][x];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<long long> oracle_betti_f2(const std::vector<std::vector<int>>& simplices,
                                       std::size_t capacity) {
  if (simplices.size() > capacity) throw CapacityExceeded("oracle simplex budget exceeded");
  if (simplices.empty()) return {0};

  std::vector<std::map<std::vector<int>, std::size_t>> index;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    const std::size_t d = s.size() - 1;
    if (index.size() <= d) index.resize(d + 1);
    index[d].emplace(s, 0);
  }
  for (auto& level : index) {
    std::size_t i = 0;
    for (auto& [s, pos] : level) pos = i++;
  }

  const std::size_t top = index.size() - 1;
  // rank[d] = rank of the map from d-chains to (d-1)-chains; d = 0 is the
  // augmentation.
  std::vector<std::size_t> rank(top + 2, 0);
  rank[0] = 1;
  for (std::size_t d = 1; d <= top; ++d) {
    const std::size_t words = (index[d - 1].size() + 63) / 64;
    std::vector<Bits> rows;  // one row per d-simplex
    rows.reserve(index[d].size());
    for (const auto& [s, pos] : index[d]) {
      Bits row(words, 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<long>(i));
        const auto it = index[d - 1].find(face);
        if (it == index[d - 1].end()) throw std::invalid_argument("oracle: missing face");
        row[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
      }
      rows.push_back(std::move(row));
    }
    rank[d] = rank_f2(std::move(rows));
  }

  std::vector<long long> betti(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    betti[d] = static_cast<long long>(index[d].size()) - static_cast<long long>(rank[d]) -
               static_cast<long long>(rank[d + 1]);
  }
  return betti;
}

bool oracle_disjoint(std::pair<int, int> c1, std::pair<int, int> c2, int n_points) {
  std::vector<char> owner;
  for (int x = 1; x <= n_points; ++x) {
    const bool in1 = (x == c1.first || x == c1.second);
    const bool in2 = (x == c2.first || x == c2.second);
    if (in1 && in2) return true;
    if (in1) owner.push_back('a');
    if (in2) owner.push_back('b');
  }
  int changes = 0;
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (owner[i] != owner[(i + 1) % owner.size()]) ++changes;
  }
  return changes < 4;
}

std::vector<std::vector<int>> oracle_clique_subsets(const std::vector<std::vector<bool>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > 24) throw BadParameters("oracle_clique_subsets is limited to 24 vertices");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (mask & (std::uint32_t{1} << v)) members.push_back(v);
    }
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < members.size() && clique; ++j) {
        clique = adjacency[members[i]][members[j]];
      }
    }
    if (clique) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleReport make_report(std::string subject, std::string oracle_value, std::string engine_value) {
  OracleReport r{std::move(subject), std::move(oracle_value), std::move(engine_value), false};
  r.agree = r.oracle_value == r.engine_value;
  return r;
}

}  // namespace helix::oracle
