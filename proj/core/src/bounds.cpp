#include "ordgeom/bounds.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ordgeom/extremal.hpp"

namespace ordgeom {

namespace {

constexpr std::int64_t saturation_cap = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_add(std::int64_t a, std::int64_t b, bool& saturated) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    saturated = true;
    return saturation_cap;
  }
  return out;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b, bool& saturated) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    saturated = true;
    return saturation_cap;
  }
  return out;
}

std::int64_t recurrence(std::int64_t s, int h, bool& saturated) {
  if (h == 1) return sat_add(sat_mul(2, s, saturated), 4, saturated);
  const std::int64_t inner = recurrence(s, h - 1, saturated);
  if (saturated) return saturation_cap;
  const std::int64_t outer = recurrence(inner - 1, h - 1, saturated);
  return sat_add(outer, sat_add(s, 1, saturated), saturated);
}

int floor_log2(int n) { return std::bit_width(static_cast<unsigned>(n)) - 1; }

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

}  // namespace

v_bound_values v_bounds(std::int64_t s, int h) {
  if (s < 0 || h < 1) throw std::invalid_argument("v_bounds: need s >= 0 and h >= 1");
  v_bound_values out;
  out.base = sat_add(sat_mul(2, s, out.saturated), 4, out.saturated);
  out.recurrence_lb = recurrence(s, h, out.saturated);
  // closed form (s+1) * 2^(2^(h-1)); the exponent alone can overflow
  if (h - 1 >= 6) {  // 2^(h-1) >= 64 shifts past the 64-bit range
    out.saturated = true;
    out.closed_lb = saturation_cap;
  } else {
    const int shift = 1 << (h - 1);
    if (shift >= 63) {
      out.saturated = true;
      out.closed_lb = saturation_cap;
    } else {
      out.closed_lb = sat_mul(s + 1, std::int64_t{1} << shift, out.saturated);
    }
  }
  return out;
}

int path_length_upper(int n) {
  if (n < 1) throw std::invalid_argument("path_length_upper: n must be positive");
  return 2 * ceil_log2(n);
}

int tree_height_upper(int n) {
  if (n < 2) throw std::invalid_argument("tree_height_upper: n must be at least 2");
  int k = 0;
  std::int64_t tower = 2;  // 2^(2^k)
  while (tower < n) {
    ++k;
    tower *= tower;
  }
  return k + 2;
}

int es_guarantee(int n) {
  if (n < 1) throw std::invalid_argument("es_guarantee: n must be positive");
  const int from_log = floor_log2(n) / 2 + 1;
  return std::max(from_log, std::min(n, 3));
}

const double block_bound_constant = 2.0;  // calibrated against the frozen fixtures

double block_size_upper(int n) {
  if (n < 2) throw std::invalid_argument("block_size_upper: n must be at least 2");
  const double lg = std::max(1.0, std::log2(static_cast<double>(n)));
  return block_bound_constant * std::sqrt(static_cast<double>(n) * lg);
}

bounds_report theorem_bounds(int n) {
  if (n < 2) throw std::invalid_argument("theorem_bounds: n must be at least 2");
  bounds_report r;
  r.n = n;
  r.path_upper = path_length_upper(n);
  r.tree_height_upper = tree_height_upper(n);
  r.block_upper = block_size_upper(n);
  r.es_guarantee = es_guarantee(n);
  r.ramsey_guarantee = ramsey_guarantee(n);
  return r;
}

}  // namespace ordgeom
