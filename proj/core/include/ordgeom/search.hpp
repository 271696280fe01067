#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "ordgeom/egraph.hpp"

namespace ordgeom {

/// Caps for the exact searches. A search that hits a cap returns its best
/// witness so far with exact == false; results are only ever reported exact
/// when the whole space was explored.
struct search_budget {
  std::uint64_t max_nodes = 0;  ///< 0 = unlimited
  double max_seconds = 0.0;     ///< 0 = unlimited
  int stop_at = 0;              ///< 0 = none; stop early once the best value reaches this
};

struct path_search_result {
  path_witness witness;
  bool exact = true;
  std::uint64_t nodes = 0;

  int length() const { return witness.length(); }
};

struct tree_search_result {
  tree_witness witness;
  bool exact = true;
  std::uint64_t nodes = 0;

  int size() const { return witness.size(); }
};

enum class tree_direction { ascending, descending, either };

const char* to_string(tree_direction d);
tree_direction tree_direction_from_string(const std::string& s);

/// Longest monotone non-crossing path, by backtracking over rank-increasing
/// extensions with incremental crossing checks. One ascending pass suffices:
/// reversing a descending path yields an ascending one of the same length.
path_search_result longest_monotone_noncrossing_path(const geometric_graph& g,
                                                     const edge_ordering& o,
                                                     const search_budget& budget = {});

/// Largest monotone non-crossing complete binary tree of the requested
/// direction, by backtracking over root and child choices per height.
/// Left/right subtree exchanges are pruned by requiring the left child's
/// vertex index below the right child's.
tree_search_result largest_monotone_noncrossing_complete_tree(
    const geometric_graph& g, const edge_ordering& o, tree_direction dir,
    const search_budget& budget = {});

/// Longest non-crossing chain alternating between the two sides with strictly
/// increasing edge slopes, by exhaustive enumeration. The union must be in
/// convex position and the sides separable by a line.
std::vector<point> max_alternating_slope_chain(std::span<const point> u_side,
                                               std::span<const point> v_side);

enum class minimax_statistic { path, tree_either, tree_ascending };

const char* to_string(minimax_statistic s);
minimax_statistic minimax_statistic_from_string(const std::string& s);

struct minimax_result {
  int value = 0;
  edge_ordering witness;  ///< an ordering attaining the minimax value
  std::uint64_t orderings_tried = 0;
};

/// Exact minimum over all m! edge orderings of the chosen statistic.
/// Rank-reversal symmetry halves the enumeration for the path and
/// direction-free tree statistics. Requires n <= 5.
minimax_result minimax_over_orderings(const geometric_graph& g, minimax_statistic stat);

}  // namespace ordgeom
