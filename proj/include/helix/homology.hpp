#pragma once

// Reduced integral simplicial homology via Smith normal form of the
// boundary matrices.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "helix/flag_complex.hpp"

namespace helix {

using BigInt = boost::multiprecision::cpp_int;

/// Integer matrix in column-major sparse form.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  /// columns[j] = (row, value) pairs, value != 0.
  std::vector<std::vector<std::pair<int, long long>>> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
};

struct SmithSummary {
  std::size_t rank = 0;
  /// Invariant factors greater than 1, ascending.
  std::vector<BigInt> torsion;
};

/// Rank and torsion coefficients of an integer matrix. Runs in checked
/// 64-bit arithmetic and falls back to arbitrary precision on overflow.
SmithSummary smith_summary(const SparseIntMatrix& m);

/// Invariant factors (the non-zero diagonal of the Smith normal form) of a
/// small dense matrix, computed in arbitrary precision.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> dense);

struct HomologyProfile {
  /// Flags the empty complex; its groups are all reported as zero.
  bool empty = false;
  /// Reduced Betti numbers by dimension.
  std::vector<long long> betti;
  /// Torsion coefficients by dimension.
  std::vector<std::vector<BigInt>> torsion;

  bool acyclic() const;
  bool torsion_free() const;
  /// Smallest i with nonzero reduced H_i, if any.
  std::optional<int> lowest_nonzero() const;
  /// Reduced homology of the (dim)-sphere.
  bool is_sphere_of_dimension(int dim) const;
  bool operator==(const HomologyProfile& o) const;
};

/// Boundary matrix from dimension `dim` to `dim - 1`; `dim == 0` yields the
/// augmentation row. Simplices are grouped per dimension.
SparseIntMatrix boundary_matrix(const std::vector<std::vector<Simplex>>& by_dim, int dim);

/// Groups a face-closed simplex list by dimension.
std::vector<std::vector<Simplex>> group_by_dimension(const std::vector<Simplex>& simplices);

HomologyProfile reduced_homology(const std::vector<Simplex>& simplices);

/// Homology of the clique complex of g.
HomologyProfile homology(const CompatibilityGraph& g, std::size_t capacity = default_capacity());

/// Reduced Euler characteristic from simplex counts.
long long reduced_euler_characteristic(const std::vector<Simplex>& simplices);

std::string to_string(const BigInt& x);

}  // namespace helix
