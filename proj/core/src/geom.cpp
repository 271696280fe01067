#include "ordgeom/geom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordgeom {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact addition");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact subtraction");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact multiplication");
  return out;
}

orientation orient(point p, point q, point r) {
  const std::int64_t det =
      checked_sub(checked_mul(checked_sub(q.x, p.x), checked_sub(r.y, p.y)),
                  checked_mul(checked_sub(q.y, p.y), checked_sub(r.x, p.x)));
  if (det > 0) return orientation::counterclockwise;
  if (det < 0) return orientation::clockwise;
  return orientation::collinear;
}

namespace {

// Direction of a segment normalized so dx >= 0; vertical becomes (0, 1).
struct direction2 {
  std::int64_t dx;
  std::int64_t dy;
};

direction2 normalized_direction(const segment& s) {
  std::int64_t dx = checked_sub(s.b.x, s.a.x);
  std::int64_t dy = checked_sub(s.b.y, s.a.y);
  if (dx == 0 && dy == 0) throw std::invalid_argument("degenerate segment");
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy};
}

}  // namespace

int slope_compare(const segment& e, const segment& f) {
  const direction2 de = normalized_direction(e);
  const direction2 df = normalized_direction(f);
  const bool ve = de.dx == 0;
  const bool vf = df.dx == 0;
  if (ve && vf) return 0;
  if (ve) return 1;   // vertical is the greatest slope
  if (vf) return -1;
  const std::int64_t lhs = checked_mul(de.dy, df.dx);
  const std::int64_t rhs = checked_mul(df.dy, de.dx);
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

bool slope_less(const segment& e, const segment& f) { return slope_compare(e, f) < 0; }

bool segments_cross(const segment& e, const segment& f) {
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
  const orientation o1 = orient(e.a, e.b, f.a);
  const orientation o2 = orient(e.a, e.b, f.b);
  const orientation o3 = orient(f.a, f.b, e.a);
  const orientation o4 = orient(f.a, f.b, e.b);
  if (o1 == orientation::collinear || o2 == orientation::collinear ||
      o3 == orientation::collinear || o4 == orientation::collinear)
    return false;  // touching configurations are not interior crossings
  return o1 != o2 && o3 != o4;
}

hull_chains hulls(std::span<const point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 2) throw std::invalid_argument("hulls: need at least two points");

  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a] < pts[b]; });

  const auto build = [&](orientation keep) {
    std::vector<int> chain;
    for (int idx : order) {
      while (chain.size() >= 2 &&
             orient(pts[chain[chain.size() - 2]], pts[chain.back()], pts[idx]) != keep)
        chain.pop_back();
      chain.push_back(idx);
    }
    return chain;
  };

  hull_chains out;
  out.lower = build(orientation::counterclockwise);
  out.upper = build(orientation::clockwise);
  out.hull = out.lower;
  for (int i = static_cast<int>(out.upper.size()) - 2; i >= 1; --i)
    out.hull.push_back(out.upper[i]);
  return out;
}

std::vector<int> smaller_side(std::span<const point> pts, int i, int j) {
  const int n = static_cast<int>(pts.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw std::invalid_argument("smaller_side: bad edge endpoints");
  std::vector<int> left, right;
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    switch (orient(pts[i], pts[j], pts[k])) {
      case orientation::counterclockwise: left.push_back(k); break;
      case orientation::clockwise: right.push_back(k); break;
      case orientation::collinear:
        throw std::invalid_argument("smaller_side: point " + std::to_string(k) +
                                    " collinear with edge (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") violates general position");
    }
  }
  if (left.size() != right.size()) return left.size() < right.size() ? left : right;
  if (left.empty()) return left;
  // Equal halves: take the side holding the lexicographically smallest point.
  const auto lex_min = [&](const std::vector<int>& side) {
    return pts[*std::min_element(side.begin(), side.end(),
                                 [&](int a, int b) { return pts[a] < pts[b]; })];
  };
  return lex_min(left) < lex_min(right) ? left : right;
}

std::optional<point_set_violation> validate_point_set(std::span<const point> pts,
                                                      position_mode mode) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    if (std::abs(pts[i].x) > max_coordinate || std::abs(pts[i].y) > max_coordinate) {
      return point_set_violation{point_set_violation::kind::coordinate_out_of_range,
                                 {i, -1, -1},
                                 "point " + std::to_string(i) + " exceeds the coordinate bound"};
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j])
        return point_set_violation{point_set_violation::kind::duplicate_point,
                                   {i, j, -1},
                                   "points " + std::to_string(i) + " and " + std::to_string(j) +
                                       " coincide"};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(pts[i], pts[j], pts[k]) == orientation::collinear)
          return point_set_violation{point_set_violation::kind::collinear_triple,
                                     {i, j, k},
                                     "points " + std::to_string(i) + ", " + std::to_string(j) +
                                         ", " + std::to_string(k) + " are collinear"};
  if (mode == position_mode::convex && n >= 3) {
    const hull_chains h = hulls(pts);
    if (static_cast<int>(h.hull.size()) != n) {
      std::vector<char> on_hull(pts.size(), 0);
      for (int idx : h.hull) on_hull[idx] = 1;
      for (int i = 0; i < n; ++i)
        if (!on_hull[i])
          return point_set_violation{point_set_violation::kind::not_on_hull,
                                     {i, -1, -1},
                                     "point " + std::to_string(i) + " is not a hull vertex"};
    }
  }
  return std::nullopt;
}

}  // namespace ordgeom
