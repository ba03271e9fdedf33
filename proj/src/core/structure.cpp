#include "core/structure.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"

namespace gromov {

GromovStructure::GromovStructure(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  if (n_ < 3)
    throw Error(ErrorCode::TooSmall, "a structure needs at least 3 points, got " + std::to_string(n_));
  if (static_cast<int>(pairs_.size()) != n_)
    throw Error(ErrorCode::InvalidArgument, "expected one pair per vertex");
  for (int i = 1; i <= n_; ++i) {
    auto& [a, b] = pairs_[i - 1];
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair at vertex " + std::to_string(i) + " out of range", {i});
    if (a == b || a == i || b == i)
      throw Error(ErrorCode::InvalidArgument,
                  "pair at vertex " + std::to_string(i) + " must be two other distinct vertices",
                  {i});
  }
}

std::string GromovStructure::flat_key() const {
  std::string key(static_cast<std::size_t>(2 * n_), '\0');
  for (int i = 0; i < n_; ++i) {
    key[2 * i] = static_cast<char>(pairs_[i].first - 1);
    key[2 * i + 1] = static_cast<char>(pairs_[i].second - 1);
  }
  return key;
}

bool GromovStructure::operator<(const GromovStructure& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return pairs_ < other.pairs_;
}

namespace {

GromovStructure build_structure(int n, std::vector<std::pair<int, std::pair<int, int>>> rows) {
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(std::max(n, 0)), {0, 0});
  std::vector<bool> seen(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
  for (auto& [i, ab] : rows) {
    if (i < 1 || i > n)
      throw Error(ErrorCode::ParseError, "vertex index " + std::to_string(i) + " out of range");
    if (seen[i])
      throw Error(ErrorCode::ParseError, "duplicate row for vertex " + std::to_string(i));
    seen[i] = true;
    pairs[i - 1] = ab;
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[i]) throw Error(ErrorCode::ParseError, "missing row for vertex " + std::to_string(i));
  return GromovStructure(n, std::move(pairs));
}

}  // namespace

GromovStructure parse_structure(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == text.size()) throw Error(ErrorCode::ParseError, "empty structure input");

  std::vector<std::pair<int, std::pair<int, int>>> rows;

  if (text[pos] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("bad structure JSON: ") + e.what());
    }
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "structure JSON must be an array");
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
          !row[1].is_number_integer() || !row[2].is_number_integer())
        throw Error(ErrorCode::ParseError, "structure JSON rows must be [i, a, b] integers");
      rows.push_back({row[0].get<int>(), {row[1].get<int>(), row[2].get<int>()}});
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      std::replace(line.begin(), line.end(), ':', ' ');
      std::istringstream ls(line);
      int i, a, b;
      if (!(ls >> i >> a >> b))
        throw Error(ErrorCode::ParseError, "bad structure line: '" + line + "'");
      std::string rest;
      if (ls >> rest) throw Error(ErrorCode::ParseError, "trailing content on line: '" + line + "'");
      rows.push_back({i, {a, b}});
    }
  }

  int n = static_cast<int>(rows.size());
  try {
    return build_structure(n, std::move(rows));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, std::string("invalid structure: ") + e.what(), e.detail());
  }
}

std::string format_structure(const GromovStructure& s) {
  std::string out;
  for (int i = 1; i <= s.point_count(); ++i) {
    auto [a, b] = s.pair_at(i);
    out += std::to_string(i) + ": " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

std::string format_structure_json(const GromovStructure& s) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 1; i <= s.point_count(); ++i) {
    auto [a, b] = s.pair_at(i);
    j.push_back({i, a, b});
  }
  return j.dump();
}

StructureMatrix::StructureMatrix(const GromovStructure& s)
    : n_(s.point_count()), entries_(static_cast<std::size_t>(n_) * n_, 0) {
  for (int i = 1; i <= n_; ++i) {
    auto [a, b] = s.pair_at(i);
    entries_[(i - 1) * n_ + (a - 1)] = 1;
    entries_[(i - 1) * n_ + (b - 1)] = 1;
  }
}

StructureMatrix matrix_rep(const GromovStructure& s) { return StructureMatrix(s); }

std::vector<std::pair<int, int>> removed_edges(const GromovStructure& s) {
  std::vector<std::pair<int, int>> edges = s.pairs();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::vector<int>> pendant_free_adjacency(const GromovStructure& s) {
  int n = s.point_count();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) adj[i][i] = 0;
  for (auto [a, b] : removed_edges(s)) {
    adj[a - 1][b - 1] = 0;
    adj[b - 1][a - 1] = 0;
  }
  return adj;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw Error(ErrorCode::InvalidArgument, "images do not form a bijection on 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 1; i <= size(); ++i) p.images_[images_[i - 1] - 1] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

GromovStructure apply_permutation(const GromovStructure& s, const Permutation& sigma) {
  if (sigma.size() != s.point_count())
    throw Error(ErrorCode::SizeMismatch, "permutation size " + std::to_string(sigma.size()) +
                                             " does not match structure on " +
                                             std::to_string(s.point_count()) + " points");
  int n = s.point_count();
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto [a, b] = s.pair_at(i);
    int x = sigma.image(a), y = sigma.image(b);
    pairs[sigma.image(i) - 1] = {std::min(x, y), std::max(x, y)};
  }
  return GromovStructure(n, std::move(pairs));
}

int ChainCycleDecomposition::chain_count() const {
  int c = 0;
  for (const auto& comp : components)
    if (comp.kind == ChainCycleComponent::Kind::Chain) ++c;
  return c;
}

int ChainCycleDecomposition::end_arrow_count() const {
  int c = 0;
  for (const auto& comp : components) c += static_cast<int>(comp.end_arrows.size());
  return c;
}

ChainCycleDecomposition decompose_chains_cycles(const GromovStructure& s) {
  int n = s.point_count();
  auto mutual = [&](int i, int j) {
    auto [a, b] = s.pair_at(i);
    auto [c, d] = s.pair_at(j);
    return (a == j || b == j) && (c == i || d == i);
  };

  std::vector<std::vector<int>> links(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    for (int j : {s.pair_at(i).first, s.pair_at(i).second})
      if (mutual(i, j)) links[i].push_back(j);

  ChainCycleDecomposition result;
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);

  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;

    // gather the component
    std::vector<int> comp;
    std::vector<int> stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : links[v])
        if (!visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());

    bool is_cycle = comp.size() >= 3 &&
                    std::all_of(comp.begin(), comp.end(),
                                [&](int v) { return links[v].size() == 2; });

    ChainCycleComponent out;
    out.kind = is_cycle ? ChainCycleComponent::Kind::Cycle : ChainCycleComponent::Kind::Chain;

    // deterministic walk order
    int first = comp.front();
    if (is_cycle) {
      out.vertices.push_back(first);
      int prev = first;
      int cur = std::min(links[first][0], links[first][1]);
      while (cur != first) {
        out.vertices.push_back(cur);
        int nxt = links[cur][0] == prev ? (links[cur].size() > 1 ? links[cur][1] : links[cur][0])
                                        : links[cur][0];
        prev = cur;
        cur = nxt;
      }
    } else {
      // walk from the smallest endpoint
      int head = first;
      for (int v : comp)
        if (links[v].size() <= 1) {
          head = v;
          break;
        }
      int prev = 0, cur = head;
      while (true) {
        out.vertices.push_back(cur);
        int nxt = 0;
        for (int w : links[cur])
          if (w != prev) {
            nxt = w;
            break;
          }
        if (nxt == 0) break;
        prev = cur;
        cur = nxt;
      }
      for (int v : {out.vertices.front(), out.vertices.back()}) {
        auto [a, b] = s.pair_at(v);
        for (int target : {a, b}) {
          bool is_mutual = std::find(links[v].begin(), links[v].end(), target) != links[v].end();
          if (!is_mutual) out.end_arrows.push_back({v, target});
        }
        if (out.vertices.size() == 1) break;  // isolated vertex: both arrows from it
      }
    }
    result.components.push_back(std::move(out));
  }
  return result;
}

GromovStructure restrict(const GromovStructure& s, const std::vector<int>& subset) {
  int n = s.point_count();
  std::vector<int> t = subset;
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.size() != subset.size())
    throw Error(ErrorCode::InvalidArgument, "subset has repeated vertices");
  if (!t.empty() && (t.front() < 1 || t.back() > n))
    throw Error(ErrorCode::IndexOutOfRange, "subset vertex out of range");
  if (t.size() < 3)
    throw Error(ErrorCode::TooSmall, "restriction needs at least 3 vertices");

  std::vector<int> relabel(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < t.size(); ++k) relabel[t[k]] = static_cast<int>(k) + 1;

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(t.size());
  for (int v : t) {
    auto [a, b] = s.pair_at(v);
    if (relabel[a] == 0 || relabel[b] == 0)
      throw Error(ErrorCode::NotClosed,
                  "vertex " + std::to_string(v) + " points outside the subset", {v});
    pairs.push_back({relabel[a], relabel[b]});
  }
  return GromovStructure(static_cast<int>(t.size()), std::move(pairs));
}

}  // namespace gromov
