#include "ordgeom/egraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordgeom {

int geometric_graph::edge_id(int u, int v) const {
  const int n = vertex_count();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::out_of_range("edge_id: bad vertex pair");
  if (u > v) std::swap(u, v);
  // Lexicographic position of (u, v) among all pairs i < j.
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

geometric_graph build_complete_graph(std::span<const point> pts) {
  if (pts.empty()) throw std::invalid_argument("build_complete_graph: empty point set");
  if (auto bad = validate_point_set(pts, position_mode::general))
    throw std::invalid_argument("build_complete_graph: " + bad->message);
  geometric_graph g;
  g.points_.assign(pts.begin(), pts.end());
  const int n = static_cast<int>(pts.size());
  g.edges_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges_.emplace_back(i, j);
  return g;
}

std::vector<int> edge_ordering::edges_by_rank() const {
  std::vector<int> by_rank(ranks_.size());
  for (int e = 0; e < static_cast<int>(ranks_.size()); ++e) by_rank[ranks_[e] - 1] = e;
  return by_rank;
}

edge_ordering make_edge_ordering(const geometric_graph& g, std::vector<int> ranks) {
  const int m = g.edge_count();
  if (static_cast<int>(ranks.size()) != m)
    throw std::invalid_argument("make_edge_ordering: expected " + std::to_string(m) +
                                " ranks, got " + std::to_string(ranks.size()));
  std::vector<char> seen(m + 1, 0);
  for (int e = 0; e < m; ++e) {
    const int r = ranks[e];
    if (r < 1 || r > m)
      throw std::invalid_argument("make_edge_ordering: rank " + std::to_string(r) +
                                  " of edge " + std::to_string(e) + " is out of range 1.." +
                                  std::to_string(m));
    if (seen[r])
      throw std::invalid_argument("make_edge_ordering: duplicate rank " + std::to_string(r) +
                                  " at edge " + std::to_string(e));
    seen[r] = 1;
  }
  edge_ordering o;
  o.ranks_ = std::move(ranks);
  return o;
}

edge_ordering lexicographic_ordering(const geometric_graph& g) {
  std::vector<int> ranks(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) ranks[e] = e + 1;
  return make_edge_ordering(g, std::move(ranks));
}

edge_ordering reverse_ordering(const edge_ordering& o) {
  const int m = o.size();
  edge_ordering rev;
  rev.ranks_ = o.ranks();
  for (int& r : rev.ranks_) r = m + 1 - r;
  return rev;
}

const char* to_string(direction d) {
  return d == direction::ascending ? "ascending" : "descending";
}

path_witness reversed(const path_witness& w) {
  path_witness out;
  out.vertices.assign(w.vertices.rbegin(), w.vertices.rend());
  out.dir = w.dir == direction::ascending ? direction::descending : direction::ascending;
  return out;
}

namespace {

std::string edge_name(std::pair<int, int> e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void check_vertices_in_range(const geometric_graph& g, const std::vector<int>& vs) {
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("witness vertex " + std::to_string(v) + " outside graph");
}

std::optional<witness_violation> distinct_or_violation(const std::vector<int>& vs) {
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return witness_violation{witness_violation::kind::malformed,
                             {-1, -1},
                             {-1, -1},
                             "witness repeats a vertex"};
  return std::nullopt;
}

std::optional<witness_violation> crossing_violation(const geometric_graph& g,
                                                    const std::vector<std::pair<int, int>>& es) {
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const segment sa{g.vertex(es[a].first), g.vertex(es[a].second)};
      const segment sb{g.vertex(es[b].first), g.vertex(es[b].second)};
      if (segments_cross(sa, sb))
        return witness_violation{witness_violation::kind::crossing, es[a], es[b],
                                 "edges " + edge_name(es[a]) + " and " + edge_name(es[b]) +
                                     " cross"};
    }
  return std::nullopt;
}

bool rank_ok(direction d, int prev_rank, int next_rank) {
  return d == direction::ascending ? next_rank > prev_rank : next_rank < prev_rank;
}

}  // namespace

std::optional<witness_violation> validate_witness(const geometric_graph& g,
                                                  const edge_ordering& o,
                                                  const path_witness& w) {
  if (w.vertices.empty())
    return witness_violation{witness_violation::kind::malformed, {-1, -1}, {-1, -1},
                             "empty path"};
  check_vertices_in_range(g, w.vertices);
  if (auto v = distinct_or_violation(w.vertices)) return v;

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    edges.emplace_back(w.vertices[i], w.vertices[i + 1]);

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const int r0 = o.rank(g.edge_id(edges[i].first, edges[i].second));
    const int r1 = o.rank(g.edge_id(edges[i + 1].first, edges[i + 1].second));
    if (!rank_ok(w.dir, r0, r1))
      return witness_violation{witness_violation::kind::rank_violation, edges[i], edges[i + 1],
                               "ranks of " + edge_name(edges[i]) + " and " +
                                   edge_name(edges[i + 1]) + " are not " + to_string(w.dir)};
  }
  return crossing_violation(g, edges);
}

std::optional<witness_violation> validate_witness(const geometric_graph& g,
                                                  const edge_ordering& o,
                                                  const tree_witness& w) {
  if (w.height < 0 || static_cast<int>(w.nodes.size()) != complete_tree_size(w.height))
    return witness_violation{witness_violation::kind::malformed, {-1, -1}, {-1, -1},
                             "tree node count does not match height"};
  check_vertices_in_range(g, w.nodes);
  if (auto v = distinct_or_violation(w.nodes)) return v;

  std::vector<std::pair<int, int>> edges;
  const int total = static_cast<int>(w.nodes.size());
  const int internal = (total - 1) / 2;  // node t has children 2t+1, 2t+2
  for (int t = 0; t < internal; ++t) {
    for (int c : {2 * t + 1, 2 * t + 2}) {
      edges.emplace_back(w.nodes[t], w.nodes[c]);
      if (t == 0) continue;  // edges at the root have no incoming rank to beat
      const int parent = (t - 1) / 2;
      const int r0 = o.rank(g.edge_id(w.nodes[parent], w.nodes[t]));
      const int r1 = o.rank(g.edge_id(w.nodes[t], w.nodes[c]));
      if (!rank_ok(w.dir, r0, r1))
        return witness_violation{
            witness_violation::kind::rank_violation,
            {w.nodes[parent], w.nodes[t]},
            {w.nodes[t], w.nodes[c]},
            "root-to-leaf ranks through vertex " + std::to_string(w.nodes[t]) + " are not " +
                to_string(w.dir)};
    }
  }
  return crossing_violation(g, edges);
}

const char* to_string(triple_color c) { return c == triple_color::blue ? "blue" : "red"; }

triple_coloring::triple_coloring(std::vector<int> order, std::vector<triple_color> colors)
    : order_(std::move(order)), colors_(std::move(colors)) {
  const std::size_t n = order_.size();
  const std::size_t expect = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
  if (colors_.size() != expect)
    throw std::invalid_argument("triple_coloring: color table size mismatch");
}

std::size_t triple_coloring::triple_index(int i, int j, int k) const {
  const std::size_t n = order_.size();
  if (!(0 <= i && i < j && j < k && k < static_cast<int>(n)))
    throw std::out_of_range("triple_coloring: positions must satisfy 0 <= i < j < k < n");
  const auto c3 = [](std::size_t v) { return v >= 3 ? v * (v - 1) * (v - 2) / 6 : 0; };
  const auto c2 = [](std::size_t v) { return v >= 2 ? v * (v - 1) / 2 : 0; };
  const std::size_t before_i = c3(n) - c3(n - i);
  const std::size_t before_j = c2(n - i - 1) - c2(n - j);
  return before_i + before_j + static_cast<std::size_t>(k - j - 1);
}

triple_color triple_coloring::color(int i, int j, int k) const {
  return colors_[triple_index(i, j, k)];
}

}  // namespace ordgeom
