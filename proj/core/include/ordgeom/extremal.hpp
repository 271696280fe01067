#pragma once

#include <span>
#include <vector>

#include "ordgeom/egraph.hpp"

namespace ordgeom {

/// Colors every position triple i < j < k of the x-sorted vertex sequence:
/// blue when rank(v_i v_j) < rank(v_j v_k), red otherwise.
triple_coloring triple_coloring_from_ordering(const geometric_graph& g,
                                              const edge_ordering& o);

/// Vertex sequence on which every triple's color depends only on its first
/// two elements; pair_color(i, j) is that color for sequence indices i < j.
struct prehomogeneous_sequence {
  std::vector<int> positions;  ///< chosen coloring positions, increasing
  std::vector<triple_color> pair_colors;

  int size() const { return static_cast<int>(positions.size()); }
  triple_color pair_color(int i, int j) const;
};

/// Stepwise refinement: repeatedly take the smallest remaining candidate and
/// keep the largest class of candidates agreeing on all colors with the
/// chosen prefix. Candidate-count shrinkage is asserted at every step.
prehomogeneous_sequence erdos_rado_prehomogeneous(const triple_coloring& coloring);

struct monochromatic_subset {
  std::vector<int> vertices;  ///< graph vertex ids, ascending x order
  triple_color color = triple_color::blue;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Prehomogeneous refinement followed by greedy majority selection on the
/// induced pair coloring. The result is re-verified monochromatic by an
/// exhaustive triple scan and is never smaller than ramsey_guarantee(n).
monochromatic_subset ramsey_monochromatic_subset(const triple_coloring& coloring);

/// Largest p with 2^(p(p-1)/2) * p <= n; the refinement above always keeps at
/// least this many elements.
int phase1_guarantee(int n);

/// Monochromatic subset size the two-phase pipeline commits to:
/// max(3, floor(log2 max(2, phase1_guarantee(n))) / 2 + 1) for n >= 3.
int ramsey_guarantee(int n);

/// The monochromatic subset read as a path witness: x-sorted vertices, blue
/// giving ascending ranks and red descending. x-monotone, hence non-crossing.
path_witness extract_xmonotone_path(const geometric_graph& g, const edge_ordering& o);

/// Maximum-cardinality subset in convex position (ascending vertex indices),
/// by dynamic programming over angularly ordered convex chains.
std::vector<int> largest_convex_subset(std::span<const point> pts);

/// Monotone non-crossing complete binary tree in a convex drawing: runs the
/// Ramsey pipeline, keeps the majority hull side of the monochromatic set,
/// truncates to the largest 2^h - 1 prefix and nests the tree along it.
tree_witness embed_convex_monotone_tree(const geometric_graph& g, const edge_ordering& o);

/// General-position composition: largest convex subset, then the convex
/// embedding on the induced sub-drawing with the induced rank order.
tree_witness extract_monotone_tree_general(const geometric_graph& g,
                                           const edge_ordering& o);

}  // namespace ordgeom
