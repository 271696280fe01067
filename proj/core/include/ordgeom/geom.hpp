#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ordgeom {

/// Largest coordinate magnitude accepted anywhere in the library. With
/// |x|,|y| <= 2^20 every determinant formed by the predicates fits exact
/// 64-bit arithmetic; the checked helpers below make any violation loud.
inline constexpr std::int64_t max_coordinate = std::int64_t{1} << 20;

struct point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const point&, const point&) = default;
  /// Lexicographic (x, then y).
  friend auto operator<=>(const point&, const point&) = default;
};

/// Straight line segment with distinct endpoints.
struct segment {
  point a;
  point b;
};

enum class orientation : int { clockwise = -1, collinear = 0, counterclockwise = 1 };

// Exact 64-bit arithmetic that throws std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Sign of the determinant of (q-p, r-p).
orientation orient(point p, point q, point r);

/// Three-way slope comparison by exact cross multiplication: negative when
/// slope(e) < slope(f). Vertical segments compare greater than every finite
/// slope and equal to each other.
int slope_compare(const segment& e, const segment& f);
bool slope_less(const segment& e, const segment& f);

/// True iff the segments meet in a point interior to both. Segments sharing
/// an endpoint never cross.
bool segments_cross(const segment& e, const segment& f);

struct hull_chains {
  std::vector<int> hull;   ///< counterclockwise cycle, starting at the lex-min point
  std::vector<int> lower;  ///< lower hull, lex-min to lex-max by increasing x
  std::vector<int> upper;  ///< upper hull, same endpoints, increasing x
};

/// Convex hull of at least two points in general position (indices into pts).
hull_chains hulls(std::span<const point> pts);

/// The smaller of the two vertex sets split off by the supporting line of
/// edge (i, j); indices ascending. On equal sizes, the side holding the
/// lexicographically smallest point wins. Throws if a remaining point is
/// collinear with the edge.
std::vector<int> smaller_side(std::span<const point> pts, int i, int j);

enum class position_mode { general, convex };

struct point_set_violation {
  enum class kind {
    too_few_points,
    coordinate_out_of_range,
    duplicate_point,
    collinear_triple,
    not_on_hull,
  };
  kind what{};
  std::array<int, 3> indices{-1, -1, -1};
  std::string message;
};

/// general: coordinates in range, no duplicates, no collinear triple.
/// convex: general checks plus every point a hull vertex.
/// Returns the first violation found, or nullopt when the set is valid.
std::optional<point_set_violation> validate_point_set(std::span<const point> pts,
                                                      position_mode mode);

}  // namespace ordgeom
