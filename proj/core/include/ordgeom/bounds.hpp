#pragma once

#include <cstdint>
#include <optional>

namespace ordgeom {

/// Minimum vertex budget for the single-child-then-binary-tree shape used in
/// the side-count analysis. recurrence_lb iterates
/// V(s, h) = V(V(s, h-1) - 1, h-1) + s + 1 down to the base V(s, 1) = 2s + 4;
/// closed_lb is the (s+1) * 2^(2^(h-1)) closed form it dominates.
struct v_bound_values {
  std::int64_t base = 0;
  std::int64_t recurrence_lb = 0;
  std::int64_t closed_lb = 0;
  bool saturated = false;  ///< doubly exponential growth left 64-bit range
};

v_bound_values v_bounds(std::int64_t s, int h);

/// Longest monotone non-crossing path under the recursive split ordering:
/// 2 * ceil(log2 n).
int path_length_upper(int n);

/// Ascending-tree height cap under the side-count ordering:
/// ceil(log2 log2 n) + 2, computed exactly as the smallest k with
/// n <= 2^(2^k), plus 2.
int tree_height_upper(int n);

/// Convex-position subset guaranteed in any n points in general position:
/// floor(log2 n) / 2 + 1, clamped below by min(n, 3).
int es_guarantee(int n);

/// Frozen calibration constant for the block-ordering size cap.
extern const double block_bound_constant;

/// Monotone tree size cap under the block ordering:
/// block_bound_constant * sqrt(n * log2 n).
double block_size_upper(int n);

/// Theoretical guarantees for one experiment size, with a slot for the
/// measured value they are compared against.
struct bounds_report {
  int n = 0;
  int path_upper = 0;
  int tree_height_upper = 0;
  double block_upper = 0.0;
  int es_guarantee = 0;
  int ramsey_guarantee = 0;
  std::optional<std::int64_t> measured;
};

bounds_report theorem_bounds(int n);

}  // namespace ordgeom
