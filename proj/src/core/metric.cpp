#include "core/metric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"

namespace gromov {

std::size_t MetricSpace::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(j - 1) * (j - 2) / 2 + (i - 1);
}

const Rat& MetricSpace::distance(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_)
    throw Error(ErrorCode::IndexOutOfRange,
                "distance(" + std::to_string(i) + "," + std::to_string(j) + ") on " +
                    std::to_string(n_) + " points");
  return d_[pair_index(i, j)];
}

MetricSpace MetricSpace::from_distances(int n, std::vector<Rat> lower) {
  if (n < 3)
    throw Error(ErrorCode::TooSmall, "a metric space needs at least 3 points, got " + std::to_string(n));
  if (lower.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    throw Error(ErrorCode::InvalidArgument, "expected n(n-1)/2 distances");

  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (lower[pair_index(i, j)] <= 0)
        throw Error(ErrorCode::NonPositiveDistance,
                    "d(" + std::to_string(i) + "," + std::to_string(j) + ") must be positive",
                    {i, j});

  // d{i,j} + d{i,k} >= d{j,k} for every apex i and pair {j,k}
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i) {
        if (i == j || i == k) continue;
        if (lower[pair_index(i, j)] + lower[pair_index(i, k)] < lower[pair_index(j, k)])
          throw Error(ErrorCode::TriangleViolation,
                      "d(" + std::to_string(i) + "," + std::to_string(j) + ") + d(" +
                          std::to_string(i) + "," + std::to_string(k) + ") < d(" +
                          std::to_string(j) + "," + std::to_string(k) + ")",
                      {i, j, k});
      }

  return MetricSpace(n, std::move(lower));
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    rows.push_back(split_csv(line));
  }
  return rows;
}

MetricSpace parse_csv_full(std::string_view text) {
  auto rows = csv_rows(text);
  int n = static_cast<int>(rows.size());
  if (n < 3) throw Error(ErrorCode::ParseError, "full matrix needs at least 3 rows");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorCode::ParseError,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(n));

  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = parse_rational(rows[i][j]);

  for (int i = 0; i < n; ++i)
    if (m[i][i] != 0)
      throw Error(ErrorCode::ParseError, "diagonal entry (" + std::to_string(i + 1) + "," +
                                             std::to_string(i + 1) + ") must be zero");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i])
        throw Error(ErrorCode::NotSymmetric,
                    "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        ") differ",
                    {i + 1, j + 1});

  std::vector<Rat> lower(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) lower[MetricSpace::pair_index(i, j)] = m[i - 1][j - 1];
  return MetricSpace::from_distances(n, std::move(lower));
}

MetricSpace parse_csv_lower(std::string_view text) {
  auto rows = csv_rows(text);
  int n = static_cast<int>(rows.size()) + 1;
  if (n < 3) throw Error(ErrorCode::ParseError, "lower-triangle input needs at least 2 rows");
  std::vector<Rat> lower(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) {
    const auto& row = rows[i - 2];
    if (static_cast<int>(row.size()) != i - 1)
      throw Error(ErrorCode::ParseError,
                  "row for vertex " + std::to_string(i) + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(i - 1));
    for (int j = 1; j < i; ++j) lower[MetricSpace::pair_index(j, i)] = parse_rational(row[j - 1]);
  }
  return MetricSpace::from_distances(n, std::move(lower));
}

MetricSpace parse_json_metric(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad metric JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j["n"].is_number_integer() ||
      !j["d"].is_array())
    throw Error(ErrorCode::ParseError, "metric JSON must be {\"n\": int, \"d\": [[i,j,value],...]}");
  int n = j["n"].get<int>();
  if (n < 3) throw Error(ErrorCode::ParseError, "n must be at least 3");

  std::vector<Rat> lower(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<bool> seen(lower.size(), false);
  for (const auto& row : j["d"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw Error(ErrorCode::ParseError, "metric JSON entries must be [i, j, value]");
    int a = row[0].get<int>(), b = row[1].get<int>();
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw Error(ErrorCode::ParseError,
                  "bad pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    Rat value;
    if (row[2].is_string())
      value = parse_rational(row[2].get<std::string>());
    else if (row[2].is_number_integer())
      value = Rat(BigInt(static_cast<long>(row[2].get<std::int64_t>())));
    else
      throw Error(ErrorCode::ParseError,
                  "distance values must be strings or integers (quote decimals to keep them exact)");
    auto idx = MetricSpace::pair_index(a, b);
    if (seen[idx])
      throw Error(ErrorCode::ParseError,
                  "duplicate pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    seen[idx] = true;
    lower[idx] = value;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw Error(ErrorCode::ParseError, "metric JSON does not cover every pair");
  return MetricSpace::from_distances(n, std::move(lower));
}

}  // namespace

MetricSpace parse_metric(std::string_view text, MetricFormat format) {
  if (format == MetricFormat::Auto) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) throw Error(ErrorCode::ParseError, "empty metric input");
    if (text[pos] == '{') {
      format = MetricFormat::Json;
    } else {
      auto rows = csv_rows(text);
      format = (!rows.empty() && rows[0].size() == 1) ? MetricFormat::CsvLower : MetricFormat::CsvFull;
    }
  }
  switch (format) {
    case MetricFormat::CsvFull: return parse_csv_full(text);
    case MetricFormat::CsvLower: return parse_csv_lower(text);
    case MetricFormat::Json: return parse_json_metric(text);
    case MetricFormat::Auto: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown metric format");
}

std::string format_metric_csv_lower(const MetricSpace& m) {
  std::string out;
  for (int i = 2; i <= m.point_count(); ++i) {
    for (int j = 1; j < i; ++j) {
      if (j > 1) out += ",";
      out += format_rational(m.distance(j, i));
    }
    out += "\n";
  }
  return out;
}

GromovTriple gromov_product(const MetricSpace& m, int i, int j, int k) {
  int n = m.point_count();
  for (int v : {i, j, k})
    if (v < 1 || v > n)
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range", {v});
  if (i == j || i == k || j == k)
    throw Error(ErrorCode::RepeatedIndex, "vertices must be pairwise distinct", {i, j, k});
  Rat value = (m.distance(i, j) + m.distance(i, k) - m.distance(j, k)) / 2;
  return GromovTriple{i, std::min(j, k), std::max(j, k), std::move(value)};
}

std::vector<GromovTriple> minimal_products_at(const MetricSpace& m, int i) {
  int n = m.point_count();
  if (i < 1 || i > n)
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(i) + " out of range", {i});
  std::vector<GromovTriple> best;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    for (int k = j + 1; k <= n; ++k) {
      if (k == i) continue;
      GromovTriple t = gromov_product(m, i, j, k);
      if (best.empty() || t.value < best.front().value) {
        best.clear();
        best.push_back(std::move(t));
      } else if (t.value == best.front().value) {
        best.push_back(std::move(t));
      }
    }
  }
  return best;  // loop order keeps pairs sorted
}

Extraction extract_structure_detailed(const MetricSpace& m) {
  int n = m.point_count();
  Extraction out;
  out.minima.resize(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    out.minima[i - 1] = minimal_products_at(m, i);
    const auto& mins = out.minima[i - 1];
    if (mins.size() > 1) {
      out.nongeneric_vertices.push_back(i);
    } else {
      pairs[i - 1] = {mins.front().j, mins.front().k};
      if (mins.front().value == 0) out.zero_minimum_vertices.push_back(i);
    }
  }
  if (out.nongeneric_vertices.empty()) out.structure = GromovStructure(n, std::move(pairs));
  return out;
}

GromovStructure extract_structure(const MetricSpace& m) {
  Extraction e = extract_structure_detailed(m);
  if (!e.structure) {
    std::string msg = "tied minimal products at vertices";
    for (int v : e.nongeneric_vertices) msg += " " + std::to_string(v);
    throw Error(ErrorCode::NonGeneric, msg, e.nongeneric_vertices);
  }
  return *std::move(e.structure);
}

MetricSpace apsp_closure(int n, const std::vector<Rat>& weights) {
  if (n < 3)
    throw Error(ErrorCode::TooSmall, "need at least 3 points, got " + std::to_string(n));
  if (weights.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    throw Error(ErrorCode::InvalidArgument, "expected n(n-1)/2 weights");
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (weights[MetricSpace::pair_index(i, j)] <= 0)
        throw Error(ErrorCode::NonPositiveWeight,
                    "w(" + std::to_string(i) + "," + std::to_string(j) + ") must be positive",
                    {i, j});

  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) d[i - 1][j - 1] = weights[MetricSpace::pair_index(i, j)];

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        Rat via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = std::move(via);
      }
    }

  std::vector<Rat> lower(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) lower[MetricSpace::pair_index(i, j)] = d[i - 1][j - 1];
  return MetricSpace::from_distances(n, std::move(lower));
}

}  // namespace gromov
