#include "ordgeom/codec.hpp"

#include <nlohmann/json.hpp>

namespace ordgeom {

namespace {

using json = nlohmann::ordered_json;

json points_to_json(const std::vector<point>& pts) {
  json arr = json::array();
  for (const point& p : pts) arr.push_back(json::array({p.x, p.y}));
  return arr;
}

std::vector<point> points_from_json(const json& arr) {
  if (!arr.is_array()) throw codec_error("field 'points' must be an array");
  std::vector<point> pts;
  pts.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& pj = arr[i];
    if (!pj.is_array() || pj.size() != 2 || !pj[0].is_number_integer() ||
        !pj[1].is_number_integer())
      throw codec_error("points[" + std::to_string(i) + "] must be a pair of integers");
    pts.push_back(point{pj[0].get<std::int64_t>(), pj[1].get<std::int64_t>()});
  }
  return pts;
}

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw codec_error(std::string(what) + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

direction direction_from_string(const std::string& s) {
  if (s == "ascending") return direction::ascending;
  if (s == "descending") return direction::descending;
  throw codec_error("field 'direction' must be 'ascending' or 'descending', got '" + s + "'");
}

std::vector<int> int_array(const json& j, const char* field) {
  if (!j.is_array()) throw codec_error(std::string("field '") + field + "' must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw codec_error(std::string("field '") + field + "[" + std::to_string(i) +
                        "]' must be an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

}  // namespace

std::string encode(const graph_document& doc) {
  json j;
  j["points"] = points_to_json(doc.points);
  j["complete"] = doc.complete;
  if (doc.ranks) j["ranks"] = *doc.ranks;
  if (!doc.meta.empty()) {
    json meta;
    for (const auto& [k, v] : doc.meta) meta[k] = v;
    j["meta"] = meta;
  }
  return dump(j);
}

graph_document decode_graph_document(const std::string& text) {
  const json j = parse(text, "graph document");
  if (!j.is_object()) throw codec_error("graph document: top level must be an object");
  if (!j.contains("points")) throw codec_error("graph document: missing field 'points'");

  graph_document doc;
  doc.points = points_from_json(j.at("points"));
  if (j.contains("complete")) {
    if (!j.at("complete").is_boolean()) throw codec_error("field 'complete' must be a boolean");
    doc.complete = j.at("complete").get<bool>();
    if (!doc.complete) throw codec_error("field 'complete' must be true; only complete graphs are supported");
  }
  if (j.contains("ranks")) {
    doc.ranks = int_array(j.at("ranks"), "ranks");
    const std::size_t n = doc.points.size();
    const std::size_t m = n * (n - 1) / 2;
    if (doc.ranks->size() != m)
      throw codec_error("field 'ranks' has length " + std::to_string(doc.ranks->size()) +
                        " but a complete graph on " + std::to_string(n) + " points has " +
                        std::to_string(m) + " edges");
  }
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    if (!meta.is_object()) throw codec_error("field 'meta' must be an object");
    for (const auto& [k, v] : meta.items()) {
      if (!v.is_string()) throw codec_error("meta entry '" + k + "' must be a string");
      doc.meta[k] = v.get<std::string>();
    }
  }
  return doc;
}

graph_document to_document(const geometric_graph& g, const edge_ordering* ordering,
                           std::map<std::string, std::string> meta) {
  graph_document doc;
  doc.points = g.points();
  if (ordering) doc.ranks = ordering->ranks();
  doc.meta = std::move(meta);
  return doc;
}

std::pair<geometric_graph, std::optional<edge_ordering>> from_document(
    const graph_document& doc) {
  geometric_graph g = build_complete_graph(doc.points);
  std::optional<edge_ordering> ord;
  if (doc.ranks) ord = make_edge_ordering(g, *doc.ranks);
  return {std::move(g), std::move(ord)};
}

std::string encode(const path_witness& w) {
  json j;
  j["kind"] = "path";
  j["direction"] = to_string(w.dir);
  j["vertices"] = w.vertices;
  return dump(j);
}

std::string encode(const tree_witness& w) {
  json j;
  j["kind"] = "tree";
  j["direction"] = to_string(w.dir);
  j["height"] = w.height;
  j["nodes"] = w.nodes;
  return dump(j);
}

witness_document decode_witness(const std::string& text) {
  const json j = parse(text, "witness document");
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw codec_error("witness document: missing string field 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (!j.contains("direction") || !j.at("direction").is_string())
    throw codec_error("witness document: missing string field 'direction'");
  const direction dir = direction_from_string(j.at("direction").get<std::string>());

  if (kind == "path") {
    if (!j.contains("vertices")) throw codec_error("path witness: missing field 'vertices'");
    path_witness w;
    w.vertices = int_array(j.at("vertices"), "vertices");
    w.dir = dir;
    return w;
  }
  if (kind == "tree") {
    if (!j.contains("height") || !j.at("height").is_number_integer())
      throw codec_error("tree witness: missing integer field 'height'");
    if (!j.contains("nodes")) throw codec_error("tree witness: missing field 'nodes'");
    tree_witness w;
    w.height = j.at("height").get<int>();
    w.nodes = int_array(j.at("nodes"), "nodes");
    w.dir = dir;
    if (w.height < 0 || static_cast<int>(w.nodes.size()) != complete_tree_size(w.height))
      throw codec_error("tree witness: 'nodes' must list " +
                        std::to_string(complete_tree_size(std::max(w.height, 0))) +
                        " vertices in level order for height " + std::to_string(w.height));
    return w;
  }
  throw codec_error("witness document: unknown kind '" + kind + "'");
}

std::string encode_vertex_subset(const std::vector<int>& vertices) {
  json j;
  j["kind"] = "subset";
  j["vertices"] = vertices;
  return dump(j);
}

std::vector<int> decode_vertex_subset(const std::string& text) {
  const json j = parse(text, "subset document");
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != "subset")
    throw codec_error("subset document: expected kind 'subset'");
  if (!j.contains("vertices")) throw codec_error("subset document: missing field 'vertices'");
  return int_array(j.at("vertices"), "vertices");
}

}  // namespace ordgeom
