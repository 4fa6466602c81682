#pragma once

// End-to-end sweep over every normal loop up to a length bound: builds each
// disk complex, certifies its index, cross-checks the engines against the
// brute-force oracles, and records one pass/fail entry per check.

#include <cstddef>
#include <cstdint>
#include <string>

#include "helix/export.hpp"

namespace helix {

struct SweepConfig {
  int max_length = 40;
  /// Overlap range for the exponential loop oracle.
  int oracle_max_length = 24;
  std::size_t capacity = default_capacity();
  /// Complexes up to this many vertices get full homology cross-checks.
  int full_check_vertices = 14;
  int collapse_orders = 20;
  std::uint64_t seed = 20240607;
};

struct VerificationBundle {
  Json report;
  bool pass = false;
};

/// Throws BadParameters when max_length < 3.
VerificationBundle run_verify(const SweepConfig& config);

}  // namespace helix
