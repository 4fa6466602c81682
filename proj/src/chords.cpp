#include "helix/chords.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "helix/errors.hpp"

namespace helix {
namespace {

int wrap(int label, int n) { return ((label - 1) % n + n) % n + 1; }

int cyclic_distance(int x, int y, int n) {
  const int d = ((x - y) % n + n) % n;
  return std::min(d, n - d);
}

void sort_family(std::vector<Chord>& family) {
  std::sort(family.begin(), family.end(),
            [](const Chord& x, const Chord& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
}

using ChordKey = std::pair<int, int>;

std::set<ChordKey> keys(const std::vector<Chord>& family) {
  std::set<ChordKey> out;
  for (const auto& c : family) out.emplace(c.a, c.b);
  return out;
}

}  // namespace

Chord::Chord(int x, int y, Side s, std::optional<ChordSource> src)
    : a(std::min(x, y)), b(std::max(x, y)), side(s), source(src) {
  if (x == y) throw BadParameters("chord endpoints must be distinct");
}

ChordFamilies chords_from_loop(const NormalLoop& loop) {
  if (loop.length() <= 4) throw NotSpiral("loops of length 3 or 4 carry no chord families");
  const auto cls = classify_loop(loop);
  const int k = std::get<Spiral>(cls).k;

  ChordFamilies out;
  out.k = k;
  out.labeling.n_points = loop.length();

  std::array<std::vector<int>, kEdgeCount> label_at;
  const EdgeWeights w = loop.weights();
  for (int e = 0; e < kEdgeCount; ++e) label_at[e].assign(w[e], 0);
  for (int i = 0; i < loop.length(); ++i) {
    const Crossing& c = loop.traversal[i];
    label_at[c.edge.value][c.position] = i + 1;
    out.labeling.edge_of.push_back(c.edge);
  }

  const auto sides = sub_edge_sides(loop);
  for (int e = 0; e < kEdgeCount; ++e) {
    for (int j = 1; j < w[e]; ++j) {
      const Side side = sides[e][j] == 0 ? Side::V : Side::W;
      Chord chord(label_at[e][j - 1], label_at[e][j], side, ChordSource{EdgeId{e}, j});
      (side == Side::V ? out.V : out.W).push_back(chord);
    }
  }
  sort_family(out.V);
  sort_family(out.W);
  return out;
}

ChordFamilies synthetic_chords(int k, int offset) {
  if (k < 2) throw BadParameters("k must be at least 2");
  if (k == 2 && offset != 2) throw BadParameters("the octagon only admits offset 2");
  if (k >= 3 && (offset < 0 || offset > k - 1)) {
    throw BadParameters("offset must lie in 0..k-1");
  }
  const int n = 4 * k;
  const int p = offset + 1;
  ChordFamilies out;
  out.k = k;
  out.labeling.n_points = n;
  for (int j = 1; j <= 2 * k - 3; ++j) {
    out.V.emplace_back(wrap(2 + j, n), wrap(n - j, n), Side::V);
    out.W.emplace_back(wrap(p + 1 + j, n), wrap(p - 1 - j, n), Side::W);
  }
  return out;
}

std::array<int, 2> central_points(const std::vector<Chord>& family, int n_points) {
  std::vector<bool> touched(n_points + 1, false);
  for (const auto& c : family) {
    touched.at(c.a) = true;
    touched.at(c.b) = true;
  }
  // Runs of untouched points, read cyclically from just after a touched point.
  int anchor = 0;
  for (int x = 1; x <= n_points; ++x) {
    if (touched[x]) anchor = x;
  }
  if (anchor == 0) throw MalformedFamilies("family has no chords");
  std::vector<std::vector<int>> runs;
  std::vector<int> run;
  for (int step = 1; step <= n_points; ++step) {
    const int x = wrap(anchor + step, n_points);
    if (!touched[x]) {
      run.push_back(x);
    } else if (!run.empty()) {
      runs.push_back(run);
      run.clear();
    }
  }
  if (runs.size() != 2 || runs[0].size() != 3 || runs[1].size() != 3) {
    throw MalformedFamilies("untouched points of a family must form two runs of three");
  }
  std::array<int, 2> out{runs[0][1], runs[1][1]};
  std::sort(out.begin(), out.end());
  return out;
}

OffsetInfo offset_info(const ChordFamilies& f) {
  const int n = f.labeling.n_points;
  OffsetInfo info;
  info.v_central = central_points(f.V, n);
  info.w_central = central_points(f.W, n);
  if (f.k == 2) {
    info.offset = 2;
    info.degenerate = true;
    return info;
  }
  // Relabel so a V central point is 1; the nearest W central point, read in
  // whichever direction is shorter, is p and the offset is p - 1.
  int best = n;
  for (int v : info.v_central) {
    for (int w : info.w_central) best = std::min(best, cyclic_distance(v, w, n));
  }
  info.offset = best;
  return info;
}

int offset_of(const ChordFamilies& f) { return offset_info(f).offset; }

bool t1_disjoint(const Chord& c1, const Chord& c2) {
  if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return true;
  const auto inside = [&](int x) { return c1.a < x && x < c1.b; };
  return inside(c2.a) == inside(c2.b);
}

std::vector<int> chord_free_points(const ChordFamilies& f) {
  std::vector<bool> touched(f.labeling.n_points + 1, false);
  for (const auto* family : {&f.V, &f.W}) {
    for (const auto& c : *family) touched[c.a] = touched[c.b] = true;
  }
  std::vector<int> out;
  for (int x = 1; x <= f.labeling.n_points; ++x) {
    if (!touched[x]) out.push_back(x);
  }
  return out;
}

int DihedralMap::operator()(int label) const {
  const int sign = reflect ? -1 : 1;
  return wrap(sign * (label - 1) + shift + 1, n);
}

ChordFamilies relabel(const ChordFamilies& f, const DihedralMap& m) {
  ChordFamilies out;
  out.k = f.k;
  out.labeling.n_points = f.labeling.n_points;
  if (!f.labeling.edge_of.empty()) {
    out.labeling.edge_of.resize(f.labeling.n_points);
    for (int x = 1; x <= f.labeling.n_points; ++x) {
      out.labeling.edge_of[m(x) - 1] = f.labeling.edge_of[x - 1];
    }
  }
  for (const auto& c : f.V) out.V.emplace_back(m(c.a), m(c.b), Side::V, c.source);
  for (const auto& c : f.W) out.W.emplace_back(m(c.a), m(c.b), Side::W, c.source);
  sort_family(out.V);
  sort_family(out.W);
  return out;
}

std::optional<std::pair<DihedralMap, bool>> find_relabeling(const ChordFamilies& from,
                                                           const ChordFamilies& to) {
  const int n = from.labeling.n_points;
  if (n != to.labeling.n_points) return std::nullopt;
  const auto target_v = keys(to.V);
  const auto target_w = keys(to.W);
  for (bool reflect : {false, true}) {
    for (int shift = 0; shift < n; ++shift) {
      const DihedralMap m{n, shift, reflect};
      const ChordFamilies image = relabel(from, m);
      const auto v = keys(image.V);
      const auto w = keys(image.W);
      if (v == target_v && w == target_w) return std::pair(m, false);
      if (v == target_w && w == target_v) return std::pair(m, true);
    }
  }
  return std::nullopt;
}

}  // namespace helix
