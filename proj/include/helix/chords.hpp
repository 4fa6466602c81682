#pragma once

// Flat-disk model of a spiral disk: its boundary crossings are numbered
// 1..4k in traversal order, and every edge-compressing disk appears as a
// chord joining two boundary points. Disks on one side of the surface form
// the family V, disks on the other side the family W.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "helix/normal_curves.hpp"

namespace helix {

enum class Side { V, W };

/// The sub-edge of the 1-skeleton a chord was built from.
struct ChordSource {
  EdgeId edge;
  int segment = 0;
};

struct Chord {
  int a = 0;  ///< smaller endpoint label
  int b = 0;  ///< larger endpoint label
  Side side = Side::V;
  std::optional<ChordSource> source;

  Chord() = default;
  Chord(int x, int y, Side s, std::optional<ChordSource> src = std::nullopt);

  bool operator==(const Chord& o) const { return a == o.a && b == o.b && side == o.side; }
};

struct BoundaryLabeling {
  int n_points = 0;
  /// edge_of[label - 1]; empty for synthetic diagrams.
  std::vector<EdgeId> edge_of;
};

struct ChordFamilies {
  std::vector<Chord> V;
  std::vector<Chord> W;
  int k = 0;
  BoundaryLabeling labeling;

  const std::vector<Chord>& family(Side s) const { return s == Side::V ? V : W; }
};

/// Chords for every pair of adjacent crossings along an edge, sided by the
/// hemisphere containing the sub-edge between them (V = side of vertex 0).
/// Throws NotSpiral for loops of length 3 or 4.
ChordFamilies chords_from_loop(const NormalLoop& loop);

/// The model diagram: V nested around central point 1, W nested around
/// central point offset + 1. Requires k >= 2 and 0 <= offset <= k - 1
/// (offset 2 only, for k = 2); throws BadParameters otherwise.
ChordFamilies synthetic_chords(int k, int offset);

struct OffsetInfo {
  int offset = 0;
  /// True for the octagon, where the offset is fixed at 2 by convention.
  bool degenerate = false;
  std::array<int, 2> v_central{};
  std::array<int, 2> w_central{};
};

/// Central points of one family: the middles of the two runs of three
/// consecutive boundary points carrying no endpoint of that family.
/// Throws MalformedFamilies when the untouched points are not two such runs.
std::array<int, 2> central_points(const std::vector<Chord>& family, int n_points);

OffsetInfo offset_info(const ChordFamilies& f);
int offset_of(const ChordFamilies& f);

/// True unless the endpoints strictly interleave around the circle.
bool t1_disjoint(const Chord& c1, const Chord& c2);

/// Boundary points (1-based) that are an endpoint of no chord in either family.
std::vector<int> chord_free_points(const ChordFamilies& f);

/// Label map of a rotation (and optional reflection) of the n-gon:
/// label x goes to ((sign * (x - 1) + shift) mod n) + 1.
struct DihedralMap {
  int n = 0;
  int shift = 0;
  bool reflect = false;
  int operator()(int label) const;
};

ChordFamilies relabel(const ChordFamilies& f, const DihedralMap& m);

/// Finds a dihedral relabeling, optionally combined with exchanging the
/// roles of V and W, that carries `from` onto `to` as sets of chords.
std::optional<std::pair<DihedralMap, bool>> find_relabeling(const ChordFamilies& from,
                                                           const ChordFamilies& to);

}  // namespace helix
