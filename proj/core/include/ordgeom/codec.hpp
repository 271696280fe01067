#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ordgeom/egraph.hpp"

namespace ordgeom {

/// Parse failure with the offending field (and byte offset when known).
struct codec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk form of a graph: points, implicit complete edge set, optional rank
/// array (position e holds the rank of edge e), free-form provenance strings.
struct graph_document {
  std::vector<point> points;
  bool complete = true;
  std::optional<std::vector<int>> ranks;
  std::map<std::string, std::string> meta;
};

/// Canonical text form; encode(decode(text)) == text for canonical documents.
std::string encode(const graph_document& doc);
graph_document decode_graph_document(const std::string& text);

graph_document to_document(const geometric_graph& g,
                           const edge_ordering* ordering = nullptr,
                           std::map<std::string, std::string> meta = {});

/// Builds the validated graph (and ordering, when ranks are present).
std::pair<geometric_graph, std::optional<edge_ordering>> from_document(
    const graph_document& doc);

using witness_document = std::variant<path_witness, tree_witness>;

std::string encode(const path_witness& w);
std::string encode(const tree_witness& w);
witness_document decode_witness(const std::string& text);

/// 0/1/2-vertex subsets and other vertex lists share the witness file shape.
std::string encode_vertex_subset(const std::vector<int>& vertices);
std::vector<int> decode_vertex_subset(const std::string& text);

}  // namespace ordgeom
