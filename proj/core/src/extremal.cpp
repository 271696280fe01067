#include "ordgeom/extremal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ordgeom {

namespace {

std::vector<int> vertices_by_x(const geometric_graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.vertex(a) < g.vertex(b); });
  return order;
}

}  // namespace

triple_coloring triple_coloring_from_ordering(const geometric_graph& g,
                                              const edge_ordering& o) {
  const std::vector<int> order = vertices_by_x(g);
  const int n = static_cast<int>(order.size());
  std::vector<triple_color> colors;
  if (n >= 3) colors.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int first = o.rank(g.edge_id(order[i], order[j]));
      for (int k = j + 1; k < n; ++k) {
        const int second = o.rank(g.edge_id(order[j], order[k]));
        colors.push_back(first < second ? triple_color::blue : triple_color::red);
      }
    }
  return triple_coloring{order, std::move(colors)};
}

triple_color prehomogeneous_sequence::pair_color(int i, int j) const {
  if (!(0 <= i && i < j && j < size()))
    throw std::out_of_range("prehomogeneous pair_color: need 0 <= i < j < size");
  return pair_colors[static_cast<std::size_t>(j) * (j - 1) / 2 + i];
}

prehomogeneous_sequence erdos_rado_prehomogeneous(const triple_coloring& coloring) {
  prehomogeneous_sequence seq;
  std::vector<int> candidates(coloring.size());
  std::iota(candidates.begin(), candidates.end(), 0);

  while (!candidates.empty()) {
    const int chosen = candidates.front();
    const int k = seq.size();  // elements chosen before this one
    std::vector<int> rest(candidates.begin() + 1, candidates.end());
    seq.positions.push_back(chosen);
    if (rest.empty()) {
      for (int i = 0; i < k; ++i)
        seq.pair_colors.push_back(triple_color::blue);  // colors of the last pair are unused
      break;
    }

    // Classes keyed by the color vector against every earlier chosen element.
    std::map<std::vector<triple_color>, std::vector<int>> classes;
    for (int x : rest) {
      std::vector<triple_color> key;
      key.reserve(k);
      for (int i = 0; i < k; ++i) key.push_back(coloring.color(seq.positions[i], chosen, x));
      classes[std::move(key)].push_back(x);
    }
    const auto best = std::max_element(
        classes.begin(), classes.end(), [](const auto& lhs, const auto& rhs) {
          if (lhs.second.size() != rhs.second.size())
            return lhs.second.size() < rhs.second.size();
          return lhs.second.front() > rhs.second.front();  // tie: smallest first element wins
        });

    // Pigeonhole guarantee: the kept class covers at least a 2^-k share.
    const std::size_t kept = best->second.size();
    if (k < 63 && (kept << k) < rest.size())
      throw std::logic_error("prehomogeneous refinement shrank faster than 2^-k");

    for (int i = 0; i < k; ++i) seq.pair_colors.push_back(best->first[i]);
    candidates = best->second;
  }
  return seq;
}

int phase1_guarantee(int n) {
  if (n < 1) return 0;
  int p = 1;
  while (true) {
    const int next = p + 1;
    const int exponent = next * (next - 1) / 2;
    if (exponent >= 120) break;
    const unsigned __int128 need = (static_cast<unsigned __int128>(1) << exponent) * next;
    if (need > static_cast<unsigned __int128>(n)) break;
    p = next;
  }
  return p;
}

int ramsey_guarantee(int n) {
  if (n < 3) return std::max(n, 0);
  const int p = std::max(2, phase1_guarantee(n));
  const int lg = std::bit_width(static_cast<unsigned>(p)) - 1;
  return std::max(3, lg / 2 + 1);
}

monochromatic_subset ramsey_monochromatic_subset(const triple_coloring& coloring) {
  const int n = coloring.size();
  if (n < 3) throw std::invalid_argument("ramsey_monochromatic_subset: need at least 3 vertices");

  const prehomogeneous_sequence seq = erdos_rado_prehomogeneous(coloring);
  if (seq.size() < phase1_guarantee(n))
    throw std::logic_error("prehomogeneous sequence shorter than its guarantee");

  // Greedy majority clique on the pair coloring: each kept element fixes one
  // color toward everything kept after it.
  struct pick {
    int index;
    bool has_color;
    triple_color color;
  };
  std::vector<pick> picks;
  std::vector<int> active(seq.size());
  std::iota(active.begin(), active.end(), 0);
  while (!active.empty()) {
    const int v = active.front();
    std::vector<int> blue, red;
    for (std::size_t i = 1; i < active.size(); ++i) {
      (seq.pair_color(v, active[i]) == triple_color::blue ? blue : red).push_back(active[i]);
    }
    if (blue.empty() && red.empty()) {
      picks.push_back({v, false, triple_color::blue});
      break;
    }
    const triple_color majority =
        blue.size() >= red.size() ? triple_color::blue : triple_color::red;
    picks.push_back({v, true, majority});
    active = majority == triple_color::blue ? std::move(blue) : std::move(red);
  }

  int blue_votes = 0, red_votes = 0;
  for (const pick& p : picks)
    if (p.has_color) (p.color == triple_color::blue ? blue_votes : red_votes)++;
  const triple_color winning =
      blue_votes >= red_votes ? triple_color::blue : triple_color::red;

  std::vector<int> subset_positions;
  for (const pick& p : picks)
    if (!p.has_color || p.color == winning) subset_positions.push_back(seq.positions[p.index]);

  triple_color subset_color = winning;
  if (subset_positions.size() < 3) {
    // Any three sequence elements form a single, trivially monochromatic triple.
    subset_positions.assign(seq.positions.begin(), seq.positions.begin() + 3);
    subset_color =
        coloring.color(subset_positions[0], subset_positions[1], subset_positions[2]);
  }

  // Hard postcondition: never trust the construction, rescan every triple.
  for (std::size_t i = 0; i < subset_positions.size(); ++i)
    for (std::size_t j = i + 1; j < subset_positions.size(); ++j)
      for (std::size_t k = j + 1; k < subset_positions.size(); ++k)
        if (coloring.color(subset_positions[i], subset_positions[j], subset_positions[k]) !=
            subset_color)
          throw std::logic_error("ramsey_monochromatic_subset: triple scan found a mismatch");

  if (static_cast<int>(subset_positions.size()) < ramsey_guarantee(n))
    throw std::logic_error("ramsey_monochromatic_subset: result below the documented guarantee");

  monochromatic_subset out;
  out.color = subset_color;
  out.vertices.reserve(subset_positions.size());
  for (int pos : subset_positions) out.vertices.push_back(coloring.vertex_at(pos));
  return out;
}

path_witness extract_xmonotone_path(const geometric_graph& g, const edge_ordering& o) {
  path_witness w;
  if (g.vertex_count() < 3) {
    w.vertices = vertices_by_x(g);
    w.dir = direction::ascending;
    return w;
  }
  const triple_coloring coloring = triple_coloring_from_ordering(g, o);
  const monochromatic_subset sub = ramsey_monochromatic_subset(coloring);
  w.vertices = sub.vertices;
  w.dir = sub.color == triple_color::blue ? direction::ascending : direction::descending;
  if (auto bad = validate_witness(g, o, w))
    throw std::logic_error("extract_xmonotone_path produced an invalid witness: " +
                           bad->message);
  return w;
}

std::vector<int> largest_convex_subset(std::span<const point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("largest_convex_subset: need at least 3 points");
  if (auto bad = validate_point_set(pts, position_mode::general))
    throw std::invalid_argument("largest_convex_subset: " + bad->message);

  std::vector<int> by_lex(pts.size());
  std::iota(by_lex.begin(), by_lex.end(), 0);
  std::sort(by_lex.begin(), by_lex.end(), [&](int a, int b) { return pts[a] < pts[b]; });

  int best_size = 3;
  std::vector<int> best{by_lex[0], by_lex[1], by_lex[2]};  // any triple is convex

  for (int ar = 0; ar < n; ++ar) {
    const int a = by_lex[ar];
    std::vector<int> cand(by_lex.begin() + ar + 1, by_lex.end());
    const int m = static_cast<int>(cand.size());
    if (m + 1 <= best_size) break;  // later anchors only get smaller pools

    // Angular order around the anchor; every candidate lies in the right
    // half-plane, so one cross product compares angles exactly.
    std::sort(cand.begin(), cand.end(), [&](int u, int w) {
      return orient(pts[a], pts[u], pts[w]) == orientation::counterclockwise;
    });

    // chain[j][i]: most vertices on a convex chain a -> ... -> cand[j] -> cand[i].
    std::vector<std::vector<int>> chain(m, std::vector<int>(m, 0));
    std::vector<std::vector<int>> prev(m, std::vector<int>(m, -2));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j) {
        if (orient(pts[a], pts[cand[j]], pts[cand[i]]) == orientation::counterclockwise) {
          chain[j][i] = 3;
          prev[j][i] = -1;  // chain starts at the anchor
        }
        for (int k = 0; k < j; ++k) {
          if (chain[k][j] == 0) continue;
          if (chain[k][j] + 1 <= chain[j][i]) continue;
          if (orient(pts[cand[k]], pts[cand[j]], pts[cand[i]]) ==
              orientation::counterclockwise) {
            chain[j][i] = chain[k][j] + 1;
            prev[j][i] = k;
          }
        }
      }

    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j) {
        if (chain[j][i] <= best_size) continue;
        // closing the polygon back to the anchor must also turn left
        if (orient(pts[cand[j]], pts[cand[i]], pts[a]) != orientation::counterclockwise)
          continue;
        best_size = chain[j][i];
        best.clear();
        best.push_back(a);
        int cj = j, ci = i;
        best.push_back(cand[ci]);
        while (cj >= 0) {
          best.push_back(cand[cj]);
          const int pk = prev[cj][ci];
          ci = cj;
          cj = pk;
        }
      }
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace {

void nest_tree(const std::vector<int>& verts, int lo, int hi, int node,
               std::vector<int>& nodes) {
  nodes[node] = verts[lo];
  const int size = hi - lo;
  if (size == 1) return;
  const int half = (size - 1) / 2;
  nest_tree(verts, lo + 1, lo + 1 + half, 2 * node + 1, nodes);
  nest_tree(verts, lo + 1 + half, hi, 2 * node + 2, nodes);
}

tree_witness height_zero_witness(const geometric_graph& g) {
  tree_witness w;
  w.height = 0;
  w.nodes = {vertices_by_x(g).front()};
  w.dir = direction::ascending;
  return w;
}

}  // namespace

tree_witness embed_convex_monotone_tree(const geometric_graph& g, const edge_ordering& o) {
  if (auto bad = validate_point_set(g.points(), position_mode::convex))
    throw std::invalid_argument("embed_convex_monotone_tree: " + bad->message);
  if (g.vertex_count() < 3) return height_zero_witness(g);

  const triple_coloring coloring = triple_coloring_from_ordering(g, o);
  const monochromatic_subset sub = ramsey_monochromatic_subset(coloring);
  const direction dir =
      sub.color == triple_color::blue ? direction::ascending : direction::descending;

  // Majority hull side; x-order along one hull chain equals boundary order,
  // which keeps the nested embedding below crossing-free.
  const hull_chains h = hulls(g.points());
  std::vector<char> on_lower(g.vertex_count(), 0), on_upper(g.vertex_count(), 0);
  for (int v : h.lower) on_lower[v] = 1;
  for (int v : h.upper) on_upper[v] = 1;
  std::vector<int> lower_side, upper_side;
  for (int v : sub.vertices) {
    if (on_lower[v]) lower_side.push_back(v);
    if (on_upper[v]) upper_side.push_back(v);
  }
  const std::vector<int>& kept =
      lower_side.size() >= upper_side.size() ? lower_side : upper_side;

  tree_witness w;
  w.dir = dir;
  if (kept.size() < 3) {
    // Too short a chain for a nested tree; fall back to the best small tree.
    w.height = 1;
    w.nodes = {sub.vertices[0], sub.vertices[1], sub.vertices[2]};
  } else {
    int height = 0;
    while (complete_tree_size(height + 1) <= static_cast<int>(kept.size())) ++height;
    const int used = complete_tree_size(height);
    w.height = height;
    w.nodes.assign(used, -1);
    nest_tree(kept, 0, used, 0, w.nodes);
  }
  if (auto bad = validate_witness(g, o, w))
    throw std::logic_error("embed_convex_monotone_tree produced an invalid witness: " +
                           bad->message);
  return w;
}

tree_witness extract_monotone_tree_general(const geometric_graph& g,
                                           const edge_ordering& o) {
  if (g.vertex_count() < 3) return height_zero_witness(g);
  const std::vector<int> subset = largest_convex_subset(g.points());

  std::vector<point> sub_points;
  sub_points.reserve(subset.size());
  for (int v : subset) sub_points.push_back(g.vertex(v));
  const geometric_graph sub_graph = build_complete_graph(sub_points);

  // Dense re-ranking of the induced edges preserves every comparison.
  const int sub_m = sub_graph.edge_count();
  std::vector<int> by_global_rank(sub_m);
  std::iota(by_global_rank.begin(), by_global_rank.end(), 0);
  std::sort(by_global_rank.begin(), by_global_rank.end(), [&](int e, int f) {
    const auto [eu, ev] = sub_graph.edge(e);
    const auto [fu, fv] = sub_graph.edge(f);
    return o.rank(g.edge_id(subset[eu], subset[ev])) <
           o.rank(g.edge_id(subset[fu], subset[fv]));
  });
  std::vector<int> sub_ranks(sub_m);
  for (int pos = 0; pos < sub_m; ++pos) sub_ranks[by_global_rank[pos]] = pos + 1;
  const edge_ordering sub_order = make_edge_ordering(sub_graph, std::move(sub_ranks));

  tree_witness w = embed_convex_monotone_tree(sub_graph, sub_order);
  for (int& node : w.nodes) node = subset[node];
  if (auto bad = validate_witness(g, o, w))
    throw std::logic_error("extract_monotone_tree_general produced an invalid witness: " +
                           bad->message);
  return w;
}

}  // namespace ordgeom
