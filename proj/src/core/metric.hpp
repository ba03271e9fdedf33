#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/rational.hpp"
#include "core/structure.hpp"

namespace gromov {

enum class MetricFormat { Auto, CsvFull, CsvLower, Json };

// Finite metric space with exact rational distances. Distances are stored
// for unordered pairs only (symmetry is structural); construction validates
// positivity and every triangle inequality.
class MetricSpace {
 public:
  // `lower` holds d{i,j} for i<j grouped by the larger index:
  // (1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ...
  static MetricSpace from_distances(int n, std::vector<Rat> lower);

  int point_count() const { return n_; }
  const Rat& distance(int i, int j) const;  // 1-based, i != j
  const std::vector<Rat>& lower_triangle() const { return d_; }

  bool operator==(const MetricSpace& other) const = default;

  static std::size_t pair_index(int i, int j);  // 1-based, i != j

 private:
  MetricSpace(int n, std::vector<Rat> lower) : n_(n), d_(std::move(lower)) {}
  int n_ = 0;
  std::vector<Rat> d_;
};

MetricSpace parse_metric(std::string_view text, MetricFormat format = MetricFormat::Auto);
std::string format_metric_csv_lower(const MetricSpace& m);

// Gromov product of the triangle (i, j, k) at apex i; value is half the
// triangle-inequality slack, hence >= 0, and 0 exactly on saturated triples.
struct GromovTriple {
  int apex;
  int j, k;  // j < k
  Rat value;

  bool operator==(const GromovTriple& other) const = default;
};

GromovTriple gromov_product(const MetricSpace& m, int i, int j, int k);

// All triples at apex i attaining the minimal product, sorted by pair.
std::vector<GromovTriple> minimal_products_at(const MetricSpace& m, int i);

struct Extraction {
  std::optional<GromovStructure> structure;          // set iff every minimum is unique
  std::vector<std::vector<GromovTriple>> minima;     // per vertex (index 0 = vertex 1)
  std::vector<int> nongeneric_vertices;              // vertices with tied minima
  std::vector<int> zero_minimum_vertices;            // unique minimum of value 0
};

Extraction extract_structure_detailed(const MetricSpace& m);

// Throws NonGeneric (detail = tied vertices) when any minimum is tied.
GromovStructure extract_structure(const MetricSpace& m);

// Shortest-path closure of a complete positively-weighted graph, as a
// metric space. Idempotent: closing a metric's own distances is a no-op.
// `weights` uses the same pair layout as MetricSpace::from_distances.
MetricSpace apsp_closure(int n, const std::vector<Rat>& weights);

}  // namespace gromov
