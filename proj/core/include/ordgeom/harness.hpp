#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordgeom/bounds.hpp"
#include "ordgeom/egraph.hpp"
#include "ordgeom/orderings.hpp"
#include "ordgeom/search.hpp"

namespace ordgeom {

enum class point_shape { parabola, convex_circle, random_general };

const char* to_string(point_shape s);
point_shape point_shape_from_string(const std::string& s);

/// parabola: (i, i^2). convex_circle: integer points near a circle, resampled
/// until strictly convex, emitted in counterclockwise hull order.
/// random_general: uniform grid points resampled past collinear triples.
/// Deterministic per seed; throws after the documented retry cap.
std::vector<point> gen_points(point_shape shape, int n, std::uint64_t seed);

enum class statistic_kind {
  path,             ///< longest monotone non-crossing path (edge count)
  tree_ascending,   ///< largest ascending complete tree (vertex count)
  tree_descending,  ///< largest descending complete tree (vertex count)
  tree_either,      ///< largest monotone complete tree (vertex count)
  ramsey_path,      ///< extracted x-monotone path (edge count)
  es_subset,        ///< largest convex-position subset (vertex count)
  extract_tree,     ///< extracted monotone tree (vertex count)
};

const char* to_string(statistic_kind s);
statistic_kind statistic_kind_from_string(const std::string& s);

struct experiment_config {
  std::vector<point_shape> shapes;
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<ordering_spec> orderings;
  std::vector<statistic_kind> statistics;
  search_budget budget;
  /// When false the ms column is written as 0, which keeps reruns
  /// byte-identical; timings stay on for interactive use.
  bool measure_time = true;
  std::string csv_path;
  std::string report_path;
  std::string witness_dir;
};

/// Parses the JSON config format described in the README.
experiment_config config_from_json(const std::string& text);

struct experiment_row {
  int n = 0;
  point_shape shape = point_shape::parabola;
  std::uint64_t seed = 0;
  std::string ordering;
  statistic_kind statistic = statistic_kind::path;
  std::int64_t value = 0;
  bool exact = true;
  std::optional<double> bound;
  std::int64_t ms = 0;
};

struct experiment_report {
  std::vector<experiment_row> rows;    ///< canonical order, independent of scheduling
  std::vector<std::string> row_errors; ///< rows abandoned with their reason
};

/// Runs every (shape, n, seed, ordering, statistic) combination; a failing
/// row is recorded in row_errors and the suite continues.
experiment_report run_experiment_suite(const experiment_config& config);

/// Fixed column set: n,shape,seed,ordering,statistic,value,exact,bound,ms.
std::string to_csv(const experiment_report& report);

/// Structured report document (rows plus errors) in the codec JSON style.
std::string report_to_json(const experiment_report& report);

}  // namespace ordgeom
