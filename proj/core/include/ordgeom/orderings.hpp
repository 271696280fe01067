#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordgeom/egraph.hpp"

namespace ordgeom {

enum class ordering_kind {
  slope_divide,
  side_count,
  side_count_reversed,
  block,
  random,
  lex,
};

const char* to_string(ordering_kind k);
ordering_kind ordering_kind_from_string(const std::string& s);

struct ordering_spec {
  ordering_kind kind = ordering_kind::lex;
  int groups = 0;                ///< block: 0 derives ceil(sqrt(n / log2 n))
  std::vector<int> group_sizes;  ///< block: empty splits as evenly as possible
  std::uint64_t seed = 0;        ///< random
};

/// Default block group count, ceil(sqrt(n / max(1, log2 n))).
int default_block_groups(int n);
/// Even split of n vertices into the given number of groups.
std::vector<int> default_block_sizes(int n, int groups);

/// Recursive vertical-split ordering on a convex drawing: the edges crossing
/// each split outrank everything inside it and are sorted by slope; the two
/// halves' internal edges take the low ranks, left block first.
edge_ordering slope_divide_ordering(const geometric_graph& g);

/// Ranks sorted by the size of the edge's smaller side, ascending (descending
/// when reversed); ties broken by edge id.
edge_ordering side_count_ordering(const geometric_graph& g, bool reversed);

/// Group partition ordering on a convex drawing whose vertex indices follow
/// the counterclockwise hull order: within-group (red) edges take the low
/// ranks, grouped by group index and ordered inside each group by the
/// reversed side-count rule over the group's own points; between-group (blue)
/// edges take the high ranks sorted by slope.
edge_ordering block_ordering(const geometric_graph& g, const ordering_spec& spec);

/// Uniformly random rank permutation, reproducible per seed.
edge_ordering random_ordering(const geometric_graph& g, std::uint64_t seed);

/// Dispatch on spec.kind.
edge_ordering make_ordering(const geometric_graph& g, const ordering_spec& spec);

/// Group index of every vertex under the block partition, for structure checks.
std::vector<int> block_groups_of_vertices(int n, const std::vector<int>& sizes);

}  // namespace ordgeom
