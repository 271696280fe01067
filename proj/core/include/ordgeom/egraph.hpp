#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordgeom/geom.hpp"

namespace ordgeom {

/// Complete geometric graph over points in general position. Vertex i sits at
/// points[i]; edges are the index pairs (i, j) with i < j in lexicographic
/// order, so the edge-id <-> pair mapping is stable.
class geometric_graph {
 public:
  geometric_graph() = default;

  int vertex_count() const { return static_cast<int>(points_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool complete() const { return true; }

  const std::vector<point>& points() const { return points_; }
  const point& vertex(int v) const { return points_.at(v); }

  std::pair<int, int> edge(int id) const { return edges_.at(id); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Edge id of the pair {u, v} (order-insensitive).
  int edge_id(int u, int v) const;

  segment edge_segment(int id) const {
    const auto [u, v] = edge(id);
    return segment{points_[u], points_[v]};
  }

  friend geometric_graph build_complete_graph(std::span<const point> pts);

 private:
  std::vector<point> points_;
  std::vector<std::pair<int, int>> edges_;
};

/// Validates general position and returns the complete graph on the points.
geometric_graph build_complete_graph(std::span<const point> pts);

/// Strict total order on edges, stored as ranks[edge_id] in 1..m.
class edge_ordering {
 public:
  edge_ordering() = default;

  int size() const { return static_cast<int>(ranks_.size()); }
  int rank(int edge_id) const { return ranks_.at(edge_id); }
  const std::vector<int>& ranks() const { return ranks_; }

  /// Edge ids sorted by ascending rank; index r-1 holds the edge of rank r.
  std::vector<int> edges_by_rank() const;

  friend edge_ordering make_edge_ordering(const geometric_graph& g, std::vector<int> ranks);
  friend edge_ordering reverse_ordering(const edge_ordering& o);

 private:
  std::vector<int> ranks_;
};

/// Validates that ranks is a bijection onto 1..m for this graph.
edge_ordering make_edge_ordering(const geometric_graph& g, std::vector<int> ranks);

/// Ranks assigned by edge id order: edge e gets rank e + 1.
edge_ordering lexicographic_ordering(const geometric_graph& g);

/// Order reversal r -> m + 1 - r; swaps ascending and descending witnesses.
edge_ordering reverse_ordering(const edge_ordering& o);

/// Traversal sense of a witness: ascending means edge ranks strictly increase
/// along the path (root to leaf for trees), descending strictly decrease.
enum class direction { ascending, descending };

const char* to_string(direction d);

struct path_witness {
  std::vector<int> vertices;  // distinct vertex indices, in traversal order
  direction dir = direction::ascending;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Reverses traversal order and flips the direction label.
path_witness reversed(const path_witness& w);

/// Complete binary tree embedding. nodes is the level-order list of vertex
/// indices for the 2^(height+1) - 1 tree nodes; node t has children 2t+1 and
/// 2t+2.
struct tree_witness {
  int height = 0;
  std::vector<int> nodes;
  direction dir = direction::ascending;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Number of nodes of a complete binary tree of the given height.
constexpr int complete_tree_size(int height) { return (1 << (height + 1)) - 1; }

struct witness_violation {
  enum class kind {
    malformed,        ///< wrong node count, empty, or repeated vertex
    rank_violation,   ///< consecutive edges break the stated direction
    crossing,         ///< two witness edges cross
  };
  kind what{};
  std::pair<int, int> edge_a{-1, -1};
  std::pair<int, int> edge_b{-1, -1};
  std::string message;
};

/// nullopt when the witness is valid against this graph and ordering.
/// Throws std::out_of_range for vertex indices outside the graph.
std::optional<witness_violation> validate_witness(const geometric_graph& g,
                                                  const edge_ordering& o,
                                                  const path_witness& w);
std::optional<witness_violation> validate_witness(const geometric_graph& g,
                                                  const edge_ordering& o,
                                                  const tree_witness& w);

enum class triple_color : std::uint8_t { blue, red };

const char* to_string(triple_color c);

/// Two-coloring of all vertex triples, taken over the graph's vertices sorted
/// by x (lexicographic tie rule). Positions refer to that sorted sequence.
class triple_coloring {
 public:
  triple_coloring() = default;
  triple_coloring(std::vector<int> order, std::vector<triple_color> colors);

  int size() const { return static_cast<int>(order_.size()); }
  /// Graph vertex at sorted position p.
  int vertex_at(int p) const { return order_.at(p); }
  const std::vector<int>& order() const { return order_; }

  /// Color of the position triple i < j < k.
  triple_color color(int i, int j, int k) const;

 private:
  std::size_t triple_index(int i, int j, int k) const;

  std::vector<int> order_;
  std::vector<triple_color> colors_;
};

}  // namespace ordgeom
