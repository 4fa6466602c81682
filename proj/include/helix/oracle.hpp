#pragma once

// Brute-force references for the engines. Nothing here calls into the
// engine code: loops are found by growing curves arc by arc, homology is
// computed over the two-element field, and chord crossing is decided by
// walking the circle.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace helix::oracle {

/// A loop orbit, identified by the canonical form of its cyclic edge word
/// (the sequence of edge indices it crosses) under the 24 vertex
/// permutations, rotations and reversal.
struct OracleLoop {
  std::vector<int> word;
  /// Distinct labelled loops in the orbit.
  int labeled_count = 0;
  int length() const { return static_cast<int>(word.size()); }
  auto operator<=>(const OracleLoop&) const = default;
};

/// Every embedded connected normal loop of length <= max_length up to
/// symmetry, sorted by (length, word). Exponential; max_length <= 24.
std::vector<OracleLoop> oracle_loops(int max_length);

/// Canonical cyclic edge word. Edges use the sorted encoding
/// 0..5 = {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}.
std::vector<int> canonical_word(const std::vector<int>& edges);

/// Canonical form under rotation and reversal only (a labelled loop).
std::vector<int> cyclic_canonical_word(const std::vector<int>& edges);

/// Reduced Betti numbers over GF(2) of a face-closed simplex list; [0] for
/// the empty complex. Throws CapacityExceeded past `capacity` simplices.
std::vector<long long> oracle_betti_f2(const std::vector<std::vector<int>>& simplices,
                                       std::size_t capacity = 200'000);

/// True unless the chords strictly interleave on a circle of n_points
/// labelled 1..n_points. Sharing an endpoint counts as disjoint.
bool oracle_disjoint(std::pair<int, int> c1, std::pair<int, int> c2, int n_points);

/// All vertex subsets (as sorted lists, nonempty) that are pairwise
/// adjacent, by exhaustive subset enumeration. n <= 24.
std::vector<std::vector<int>> oracle_clique_subsets(const std::vector<std::vector<bool>>& adjacency);

struct OracleReport {
  std::string subject;
  std::string oracle_value;
  std::string engine_value;
  bool agree = false;
};

OracleReport make_report(std::string subject, std::string oracle_value, std::string engine_value);

}  // namespace helix::oracle
