#include "ordgeom/orderings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ordgeom/rng.hpp"

namespace ordgeom {

const char* to_string(ordering_kind k) {
  switch (k) {
    case ordering_kind::slope_divide: return "slope_divide";
    case ordering_kind::side_count: return "side_count";
    case ordering_kind::side_count_reversed: return "side_count_reversed";
    case ordering_kind::block: return "block";
    case ordering_kind::random: return "random";
    case ordering_kind::lex: return "lex";
  }
  return "?";
}

ordering_kind ordering_kind_from_string(const std::string& s) {
  for (ordering_kind k :
       {ordering_kind::slope_divide, ordering_kind::side_count,
        ordering_kind::side_count_reversed, ordering_kind::block, ordering_kind::random,
        ordering_kind::lex})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown ordering kind '" + s + "'");
}

namespace {

void require_convex(const geometric_graph& g, const char* who) {
  if (auto bad = validate_point_set(g.points(), position_mode::convex))
    throw std::invalid_argument(std::string(who) + ": " + bad->message);
}

// Ascending slope with edge-id tie break; a strict total order on edges.
bool slope_then_id_less(const geometric_graph& g, int e, int f) {
  const int c = slope_compare(g.edge_segment(e), g.edge_segment(f));
  return c != 0 ? c < 0 : e < f;
}

edge_ordering ranks_from_order(const geometric_graph& g, const std::vector<int>& edges_low_to_high) {
  std::vector<int> ranks(g.edge_count(), 0);
  for (int pos = 0; pos < static_cast<int>(edges_low_to_high.size()); ++pos)
    ranks[edges_low_to_high[pos]] = pos + 1;
  return make_edge_ordering(g, std::move(ranks));
}

void slope_divide_rec(const geometric_graph& g, const std::vector<int>& verts,
                      std::vector<int>& out) {
  const int n = static_cast<int>(verts.size());
  if (n < 2) return;
  const int half = n / 2;  // both halves end up with at most ceil(n/2) vertices
  const std::vector<int> left(verts.begin(), verts.begin() + half);
  const std::vector<int> right(verts.begin() + half, verts.end());
  slope_divide_rec(g, left, out);
  slope_divide_rec(g, right, out);
  std::vector<int> cross;
  cross.reserve(left.size() * right.size());
  for (int u : left)
    for (int w : right) cross.push_back(g.edge_id(u, w));
  std::sort(cross.begin(), cross.end(),
            [&](int e, int f) { return slope_then_id_less(g, e, f); });
  out.insert(out.end(), cross.begin(), cross.end());
}

}  // namespace

edge_ordering slope_divide_ordering(const geometric_graph& g) {
  require_convex(g, "slope_divide_ordering");
  std::vector<int> verts(g.vertex_count());
  std::iota(verts.begin(), verts.end(), 0);
  // Lexicographic (x, y) stands in for the x-axis split when x ties occur.
  std::sort(verts.begin(), verts.end(),
            [&](int a, int b) { return g.vertex(a) < g.vertex(b); });
  std::vector<int> order;
  order.reserve(g.edge_count());
  slope_divide_rec(g, verts, order);
  return ranks_from_order(g, order);
}

edge_ordering side_count_ordering(const geometric_graph& g, bool reversed) {
  require_convex(g, "side_count_ordering");
  const int m = g.edge_count();
  std::vector<int> side(m);
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = g.edge(e);
    side[e] = static_cast<int>(smaller_side(g.points(), u, v).size());
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int e, int f) {
    if (side[e] != side[f]) return reversed ? side[e] > side[f] : side[e] < side[f];
    return e < f;
  });
  return ranks_from_order(g, order);
}

int default_block_groups(int n) {
  if (n < 1) throw std::invalid_argument("default_block_groups: n must be positive");
  const double lg = std::max(1.0, std::log2(static_cast<double>(n)));
  const int m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n) / lg)));
  return std::max(1, std::min(m, n));
}

std::vector<int> default_block_sizes(int n, int groups) {
  if (groups < 1 || groups > n)
    throw std::invalid_argument("default_block_sizes: group count must be in 1..n");
  std::vector<int> sizes(groups, n / groups);
  for (int i = 0; i < n % groups; ++i) ++sizes[i];
  return sizes;
}

std::vector<int> block_groups_of_vertices(int n, const std::vector<int>& sizes) {
  std::vector<int> group_of(n, -1);
  int v = 0;
  for (int gi = 0; gi < static_cast<int>(sizes.size()); ++gi)
    for (int k = 0; k < sizes[gi]; ++k) group_of[v++] = gi;
  if (v != n) throw std::invalid_argument("group sizes do not sum to the vertex count");
  return group_of;
}

edge_ordering block_ordering(const geometric_graph& g, const ordering_spec& spec) {
  require_convex(g, "block_ordering");
  const int n = g.vertex_count();

  // Vertex indices must walk the hull counterclockwise (any rotation).
  if (n >= 3) {
    const hull_chains h = hulls(g.points());
    const int pos = static_cast<int>(
        std::find(h.hull.begin(), h.hull.end(), 0) - h.hull.begin());
    for (int i = 0; i < n; ++i)
      if (h.hull[(pos + i) % n] != i)
        throw std::invalid_argument(
            "block_ordering: vertex indices must follow the counterclockwise hull order");
  }

  const int groups = spec.groups > 0 ? spec.groups : default_block_groups(n);
  std::vector<int> sizes = spec.group_sizes.empty() ? default_block_sizes(n, groups)
                                                    : spec.group_sizes;
  if (static_cast<int>(sizes.size()) != groups)
    throw std::invalid_argument("block_ordering: group size list does not match group count");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("block_ordering: empty group");
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
    throw std::invalid_argument("block_ordering: group sizes do not sum to n");
  const std::vector<int> group_of = block_groups_of_vertices(n, sizes);

  std::vector<int> order;
  order.reserve(g.edge_count());

  // Red edges, group by group; inside a group the reversed side-count rule
  // over the group's own points decides.
  int first = 0;
  for (int gi = 0; gi < groups; ++gi) {
    const int count = sizes[gi];
    if (count >= 2) {
      std::vector<point> local_pts(g.points().begin() + first,
                                   g.points().begin() + first + count);
      const geometric_graph local = build_complete_graph(local_pts);
      const edge_ordering local_ord = side_count_ordering(local, /*reversed=*/true);
      for (int le : local_ord.edges_by_rank()) {
        const auto [a, b] = local.edge(le);
        order.push_back(g.edge_id(first + a, first + b));
      }
    }
    first += count;
  }

  std::vector<int> blue;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (group_of[u] != group_of[v]) blue.push_back(e);
  }
  std::sort(blue.begin(), blue.end(),
            [&](int e, int f) { return slope_then_id_less(g, e, f); });
  order.insert(order.end(), blue.begin(), blue.end());
  return ranks_from_order(g, order);
}

edge_ordering random_ordering(const geometric_graph& g, std::uint64_t seed) {
  std::vector<int> ranks(g.edge_count());
  std::iota(ranks.begin(), ranks.end(), 1);
  rng gen = seeded_rng(seed);
  deterministic_shuffle(ranks, gen);
  return make_edge_ordering(g, std::move(ranks));
}

edge_ordering make_ordering(const geometric_graph& g, const ordering_spec& spec) {
  switch (spec.kind) {
    case ordering_kind::slope_divide: return slope_divide_ordering(g);
    case ordering_kind::side_count: return side_count_ordering(g, false);
    case ordering_kind::side_count_reversed: return side_count_ordering(g, true);
    case ordering_kind::block: return block_ordering(g, spec);
    case ordering_kind::random: return random_ordering(g, spec.seed);
    case ordering_kind::lex: return lexicographic_ordering(g);
  }
  throw std::invalid_argument("make_ordering: unknown kind");
}

}  // namespace ordgeom
