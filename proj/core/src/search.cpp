#include "ordgeom/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ordgeom {

const char* to_string(tree_direction d) {
  switch (d) {
    case tree_direction::ascending: return "ascending";
    case tree_direction::descending: return "descending";
    case tree_direction::either: return "either";
  }
  return "?";
}

tree_direction tree_direction_from_string(const std::string& s) {
  for (tree_direction d :
       {tree_direction::ascending, tree_direction::descending, tree_direction::either})
    if (s == to_string(d)) return d;
  throw std::invalid_argument("unknown tree direction '" + s + "'");
}

const char* to_string(minimax_statistic s) {
  switch (s) {
    case minimax_statistic::path: return "path";
    case minimax_statistic::tree_either: return "tree_either";
    case minimax_statistic::tree_ascending: return "tree_ascending";
  }
  return "?";
}

minimax_statistic minimax_statistic_from_string(const std::string& s) {
  for (minimax_statistic k : {minimax_statistic::path, minimax_statistic::tree_either,
                              minimax_statistic::tree_ascending})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown minimax statistic '" + s + "'");
}

namespace {

// Shared budget bookkeeping; tick() is called once per expanded search node.
struct budget_state {
  explicit budget_state(const search_budget& b)
      : budget(b), start(std::chrono::steady_clock::now()) {}

  const search_budget& budget;
  std::chrono::steady_clock::time_point start;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool target_reached = false;

  bool stopped() const { return out_of_budget || target_reached; }

  bool tick() {
    if (stopped()) return false;
    ++nodes;
    if (budget.max_nodes && nodes > budget.max_nodes) {
      out_of_budget = true;
      return false;
    }
    if (budget.max_seconds > 0 && (nodes & 1023) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() > budget.max_seconds) {
        out_of_budget = true;
        return false;
      }
    }
    return true;
  }

  void note_best(int value) {
    if (budget.stop_at > 0 && value >= budget.stop_at) target_reached = true;
  }
};

struct path_searcher {
  const geometric_graph& g;
  const edge_ordering& o;
  budget_state bs;

  int n, m;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // vertex -> (rank, other), rank-sorted
  std::vector<int> path;
  std::vector<segment> segs;
  std::vector<char> used;
  int best_len = -1;
  std::vector<int> best_path;

  path_searcher(const geometric_graph& graph, const edge_ordering& ord,
                const search_budget& budget)
      : g(graph), o(ord), bs(budget), n(graph.vertex_count()), m(graph.edge_count()) {
    adjacency.resize(n);
    for (int e = 0; e < m; ++e) {
      const auto [u, v] = g.edge(e);
      const int r = o.rank(e);
      adjacency[u].emplace_back(r, v);
      adjacency[v].emplace_back(r, u);
    }
    for (auto& a : adjacency) std::sort(a.begin(), a.end());
    used.assign(n, 0);
  }

  void consider_current() {
    const int len = static_cast<int>(path.size()) - 1;
    if (len > best_len) {
      best_len = len;
      best_path = path;
      bs.note_best(len);
    }
  }

  void dfs(int v, int last_rank) {
    if (!bs.tick()) return;
    consider_current();
    if (bs.stopped()) return;
    const int len = static_cast<int>(path.size()) - 1;
    // Neither more unused vertices nor more higher ranks than needed to improve?
    if (len + (n - static_cast<int>(path.size())) <= best_len) return;
    if (len + (m - last_rank) <= best_len) return;

    const auto& cand = adjacency[v];
    auto it = std::upper_bound(cand.begin(), cand.end(),
                               std::make_pair(last_rank, std::numeric_limits<int>::max()));
    for (; it != cand.end(); ++it) {
      const auto [r, u] = *it;
      if (used[u]) continue;
      const segment next_seg{g.vertex(v), g.vertex(u)};
      bool crosses = false;
      for (const segment& s : segs)
        if (segments_cross(s, next_seg)) {
          crosses = true;
          break;
        }
      if (crosses) continue;
      path.push_back(u);
      used[u] = 1;
      segs.push_back(next_seg);
      dfs(u, r);
      segs.pop_back();
      used[u] = 0;
      path.pop_back();
      if (bs.stopped()) return;
    }
  }

  path_search_result run() {
    for (int s = 0; s < n && !bs.stopped(); ++s) {
      path.assign(1, s);
      used.assign(n, 0);
      used[s] = 1;
      segs.clear();
      dfs(s, 0);
    }
    path_search_result out;
    out.witness.vertices = best_path;
    out.witness.dir = direction::ascending;
    out.exact = !bs.stopped();
    out.nodes = bs.nodes;
    return out;
  }
};

struct tree_searcher {
  const geometric_graph& g;
  const edge_ordering& o;
  direction want;
  budget_state bs;

  int n, m;
  int total = 0;
  std::vector<int> preorder;   // node visit order: parent, left subtree, right subtree
  std::vector<int> nodes;      // level-order assignment, -1 when free
  std::vector<int> rank_in;    // incoming edge rank per node, 0 at the root
  std::vector<int> below;      // tree levels below each node
  std::vector<segment> segs;
  std::vector<char> used;

  tree_searcher(const geometric_graph& graph, const edge_ordering& ord, direction dir,
                const search_budget& budget)
      : g(graph), o(ord), want(dir), bs(budget), n(graph.vertex_count()),
        m(graph.edge_count()) {}

  bool rank_ok(int parent_rank, int edge_rank) const {
    if (parent_rank == 0) return true;  // edges at the root are unconstrained
    return want == direction::ascending ? edge_rank > parent_rank : edge_rank < parent_rank;
  }

  bool crosses_placed(const segment& s) const {
    for (const segment& placed : segs)
      if (segments_cross(placed, s)) return true;
    return false;
  }

  // Assigns the k-th node in preorder; one placement per recursion level.
  bool fill(int k) {
    if (k == total) return true;
    if (!bs.tick()) return false;
    const int t = preorder[k];
    const bool is_right_child = t > 0 && t % 2 == 0;
    const int first = is_right_child ? nodes[t - 1] + 1 : 0;  // left < right kills the swap symmetry
    const int parent_vertex = t > 0 ? nodes[(t - 1) / 2] : -1;
    const int parent_rank = t > 0 ? rank_in[(t - 1) / 2] : 0;

    for (int v = first; v < n; ++v) {
      if (used[v]) continue;
      int edge_rank = 0;
      if (t > 0) {
        edge_rank = o.rank(g.edge_id(parent_vertex, v));
        if (!rank_ok(parent_rank, edge_rank)) continue;
        // Every level below still needs a strictly fresh rank.
        if (want == direction::descending && edge_rank <= below[t]) continue;
        if (want == direction::ascending && edge_rank + below[t] > m) continue;
        const segment s{g.vertex(parent_vertex), g.vertex(v)};
        if (crosses_placed(s)) continue;
        segs.push_back(s);
      }
      nodes[t] = v;
      rank_in[t] = edge_rank;
      used[v] = 1;
      if (fill(k + 1)) return true;
      used[v] = 0;
      nodes[t] = -1;
      if (t > 0) segs.pop_back();
      if (bs.stopped()) return false;
    }
    return false;
  }

  bool try_height(int h) {
    total = complete_tree_size(h);
    if (total > n) return false;
    preorder.clear();
    const auto visit = [&](auto&& self, int t) -> void {
      if (t >= total) return;
      preorder.push_back(t);
      self(self, 2 * t + 1);
      self(self, 2 * t + 2);
    };
    visit(visit, 0);
    below.assign(total, 0);
    for (int t = total - 1; t >= 0; --t)
      below[t] = 2 * t + 1 < total ? below[2 * t + 1] + 1 : 0;
    nodes.assign(total, -1);
    rank_in.assign(total, 0);
    segs.clear();
    used.assign(n, 0);
    return fill(0);
  }
};

tree_search_result search_tree_one_direction(const geometric_graph& g,
                                             const edge_ordering& o, direction dir,
                                             const search_budget& budget) {
  tree_searcher searcher(g, o, dir, budget);
  tree_search_result out;
  out.witness.height = 0;
  out.witness.nodes = {0};
  out.witness.dir = dir;
  searcher.bs.note_best(1);

  for (int h = 1; complete_tree_size(h) <= g.vertex_count(); ++h) {
    if (searcher.bs.stopped()) break;
    if (!searcher.try_height(h)) break;
    out.witness.height = h;
    out.witness.nodes = searcher.nodes;
    out.witness.dir = dir;
    searcher.bs.note_best(out.witness.size());
  }
  out.exact = !searcher.bs.out_of_budget && !searcher.bs.target_reached;
  out.nodes = searcher.bs.nodes;
  return out;
}

}  // namespace

path_search_result longest_monotone_noncrossing_path(const geometric_graph& g,
                                                     const edge_ordering& o,
                                                     const search_budget& budget) {
  if (o.size() != g.edge_count())
    throw std::invalid_argument("path search: ordering does not match the graph");
  path_searcher searcher(g, o, budget);
  return searcher.run();
}

tree_search_result largest_monotone_noncrossing_complete_tree(const geometric_graph& g,
                                                              const edge_ordering& o,
                                                              tree_direction dir,
                                                              const search_budget& budget) {
  if (o.size() != g.edge_count())
    throw std::invalid_argument("tree search: ordering does not match the graph");
  if (g.vertex_count() < 1) throw std::invalid_argument("tree search: empty graph");
  if (dir == tree_direction::ascending)
    return search_tree_one_direction(g, o, direction::ascending, budget);
  if (dir == tree_direction::descending)
    return search_tree_one_direction(g, o, direction::descending, budget);

  tree_search_result asc = search_tree_one_direction(g, o, direction::ascending, budget);
  if (budget.stop_at > 0 && asc.size() >= budget.stop_at) return asc;
  tree_search_result desc = search_tree_one_direction(g, o, direction::descending, budget);
  tree_search_result& pick = desc.size() > asc.size() ? desc : asc;
  pick.exact = asc.exact && desc.exact;
  pick.nodes = asc.nodes + desc.nodes;
  return pick;
}

std::vector<point> max_alternating_slope_chain(std::span<const point> u_side,
                                               std::span<const point> v_side) {
  if (u_side.empty() || v_side.empty())
    throw std::invalid_argument("alternating chain: both sides must be nonempty");

  std::vector<point> pts(u_side.begin(), u_side.end());
  pts.insert(pts.end(), v_side.begin(), v_side.end());
  std::vector<char> side(pts.size(), 0);
  std::fill(side.begin() + u_side.size(), side.end(), 1);

  if (auto bad = validate_point_set(pts, position_mode::convex))
    throw std::invalid_argument("alternating chain: " + bad->message);
  // The sides are line-separable exactly when each occupies one contiguous
  // arc of the hull cycle.
  if (pts.size() >= 3) {
    const hull_chains h = hulls(pts);
    int switches = 0;
    for (std::size_t i = 0; i < h.hull.size(); ++i)
      if (side[h.hull[i]] != side[h.hull[(i + 1) % h.hull.size()]]) ++switches;
    if (switches != 2)
      throw std::invalid_argument("alternating chain: the two sides are not separated by a line");
  }

  const int total = static_cast<int>(pts.size());
  std::vector<int> chain, best;
  std::vector<segment> segs;
  std::vector<char> used(total, 0);

  const auto extend = [&](auto&& self, int last) -> void {
    if (chain.size() > best.size()) best = chain;
    for (int next = 0; next < total; ++next) {
      if (used[next] || side[next] == side[last]) continue;
      const segment s{pts[last], pts[next]};
      if (!segs.empty() && slope_compare(segs.back(), s) >= 0) continue;
      bool crosses = false;
      for (const segment& placed : segs)
        if (segments_cross(placed, s)) {
          crosses = true;
          break;
        }
      if (crosses) continue;
      chain.push_back(next);
      used[next] = 1;
      segs.push_back(s);
      self(self, next);
      segs.pop_back();
      used[next] = 0;
      chain.pop_back();
    }
  };

  for (int start = 0; start < total; ++start) {
    chain.assign(1, start);
    used.assign(total, 0);
    used[start] = 1;
    segs.clear();
    extend(extend, start);
  }

  std::vector<point> out;
  out.reserve(best.size());
  for (int idx : best) out.push_back(pts[idx]);
  return out;
}

minimax_result minimax_over_orderings(const geometric_graph& g, minimax_statistic stat) {
  const int n = g.vertex_count();
  if (n > 5)
    throw std::invalid_argument("minimax_over_orderings: full enumeration needs n <= 5");
  const int m = g.edge_count();

  // Rank reversal maps every ordering to one of equal path / direction-free
  // tree statistic, so half the permutations suffice for those.
  const bool halve = stat != minimax_statistic::tree_ascending;

  std::vector<int> ranks(m);
  std::iota(ranks.begin(), ranks.end(), 1);

  minimax_result out;
  out.value = std::numeric_limits<int>::max();
  do {
    if (halve && 2 * ranks[0] > m + 1) continue;
    ++out.orderings_tried;
    const edge_ordering ordering = make_edge_ordering(g, ranks);
    search_budget budget;
    if (out.value != std::numeric_limits<int>::max()) budget.stop_at = out.value;

    int value = 0;
    bool exact = false;
    switch (stat) {
      case minimax_statistic::path: {
        const auto r = longest_monotone_noncrossing_path(g, ordering, budget);
        value = r.length();
        exact = r.exact;
        break;
      }
      case minimax_statistic::tree_either: {
        const auto r =
            largest_monotone_noncrossing_complete_tree(g, ordering, tree_direction::either, budget);
        value = r.size();
        exact = r.exact;
        break;
      }
      case minimax_statistic::tree_ascending: {
        const auto r = largest_monotone_noncrossing_complete_tree(
            g, ordering, tree_direction::ascending, budget);
        value = r.size();
        exact = r.exact;
        break;
      }
    }
    if (exact && value < out.value) {
      out.value = value;
      out.witness = ordering;
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return out;
}

}  // namespace ordgeom
