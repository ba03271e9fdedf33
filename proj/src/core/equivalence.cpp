#include "core/equivalence.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "core/errors.hpp"

namespace gromov {

namespace {

struct CanonicalSearch {
  int n;
  std::vector<int> pair_a, pair_b;  // 0-based targets per vertex
  std::vector<std::uint8_t> best;   // flattened pair sequence, 2n bytes
  std::vector<int> best_sigma;      // 0-based images

  explicit CanonicalSearch(const GromovStructure& s) : n(s.point_count()) {
    if (n > kMaxCanonicalPoints)
      throw Error(ErrorCode::SizeLimitExceeded,
                  "canonical search supports up to " + std::to_string(kMaxCanonicalPoints) +
                      " points, got " + std::to_string(n));
    pair_a.resize(static_cast<std::size_t>(n));
    pair_b.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      pair_a[static_cast<std::size_t>(i)] = s.pair_at(i + 1).first - 1;
      pair_b[static_cast<std::size_t>(i)] = s.pair_at(i + 1).second - 1;
    }
  }

  void run() {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> inv(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> candidate(static_cast<std::size_t>(2 * n));

    do {
      for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])] = v;
      bool better = best.empty();
      bool worse = false;
      for (int p = 0; p < n; ++p) {
        int v = inv[static_cast<std::size_t>(p)];
        int x = sigma[static_cast<std::size_t>(pair_a[static_cast<std::size_t>(v)])];
        int y = sigma[static_cast<std::size_t>(pair_b[static_cast<std::size_t>(v)])];
        if (x > y) std::swap(x, y);
        candidate[static_cast<std::size_t>(2 * p)] = static_cast<std::uint8_t>(x);
        candidate[static_cast<std::size_t>(2 * p + 1)] = static_cast<std::uint8_t>(y);
        if (!better) {
          if (x != best[static_cast<std::size_t>(2 * p)]) {
            if (x < best[static_cast<std::size_t>(2 * p)])
              better = true;
            else
              worse = true;
          } else if (y != best[static_cast<std::size_t>(2 * p + 1)]) {
            if (y < best[static_cast<std::size_t>(2 * p + 1)])
              better = true;
            else
              worse = true;
          }
          if (worse) break;
        }
      }
      if (better) {
        best = candidate;
        best_sigma = sigma;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
};

}  // namespace

CanonicalForm canonical_form(const GromovStructure& s) {
  CanonicalSearch search(s);
  search.run();
  int n = s.point_count();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = search.best_sigma[static_cast<std::size_t>(i)] + 1;
  Permutation witness(std::move(images));
  GromovStructure canonical = apply_permutation(s, witness);
  return CanonicalForm{std::move(canonical), std::move(witness)};
}

bool verify_similarity(const StructureMatrix& g, const Permutation& sigma,
                       const StructureMatrix& g_prime) {
  if (g.dim() != g_prime.dim() || sigma.size() != g.dim())
    throw Error(ErrorCode::SizeMismatch, "matrix/permutation sizes differ");
  int n = g.dim();
  Permutation inv = sigma.inverse();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (g.at(i, inv.image(j)) != g_prime.at(sigma.image(i), j)) return false;
  return true;
}

namespace {

// Permutation-invariant vertex signature used to cut the assignment search:
// (in-degree, mutual degree, component kind, component size).
std::vector<std::array<int, 4>> vertex_colors(const GromovStructure& s) {
  int n = s.point_count();
  std::vector<std::array<int, 4>> colors(static_cast<std::size_t>(n));
  std::vector<int> in_degree(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    auto [a, b] = s.pair_at(i);
    ++in_degree[static_cast<std::size_t>(a)];
    ++in_degree[static_cast<std::size_t>(b)];
  }
  ChainCycleDecomposition decomp = decompose_chains_cycles(s);
  std::vector<int> comp_kind(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> comp_size(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> mutual_degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& comp : decomp.components)
    for (std::size_t idx = 0; idx < comp.vertices.size(); ++idx) {
      int v = comp.vertices[idx];
      comp_kind[static_cast<std::size_t>(v)] = comp.kind == ChainCycleComponent::Kind::Cycle ? 1 : 0;
      comp_size[static_cast<std::size_t>(v)] = static_cast<int>(comp.vertices.size());
      if (comp.kind == ChainCycleComponent::Kind::Cycle)
        mutual_degree[static_cast<std::size_t>(v)] = 2;
      else if (comp.vertices.size() == 1)
        mutual_degree[static_cast<std::size_t>(v)] = 0;
      else
        mutual_degree[static_cast<std::size_t>(v)] =
            (idx == 0 || idx + 1 == comp.vertices.size()) ? 1 : 2;
    }
  for (int v = 1; v <= n; ++v)
    colors[static_cast<std::size_t>(v - 1)] = {in_degree[static_cast<std::size_t>(v)],
                                               mutual_degree[static_cast<std::size_t>(v)],
                                               comp_kind[static_cast<std::size_t>(v)],
                                               comp_size[static_cast<std::size_t>(v)]};
  return colors;
}

struct MatchSearch {
  int n;
  const GromovStructure& s;
  const GromovStructure& s_prime;
  std::vector<int> order;              // S-vertices, rarest color first (1-based)
  std::vector<std::vector<int>> candidates;  // per order slot, same-color S'-vertices
  std::vector<int> sigma;              // 1-based images, 0 = unassigned
  std::vector<bool> used;              // S'-vertex taken
  std::uint64_t nodes = 0;

  MatchSearch(const GromovStructure& a, const GromovStructure& b) : n(a.point_count()), s(a), s_prime(b) {}

  bool consistent(int i, int j) const {
    // forward: i's pair must land inside j's pair
    auto [a, b] = s.pair_at(i);
    auto [pa, pb] = s_prime.pair_at(j);
    for (int target : {a, b}) {
      int img = sigma[static_cast<std::size_t>(target - 1)];
      if (img != 0 && img != pa && img != pb) return false;
    }
    int ia = sigma[static_cast<std::size_t>(a - 1)], ib = sigma[static_cast<std::size_t>(b - 1)];
    if (ia != 0 && ib != 0 && (std::min(ia, ib) != pa || std::max(ia, ib) != pb)) return false;

    // backward: wherever i appears as a target of an assigned vertex v,
    // j must appear in sigma(v)'s pair
    for (int v = 1; v <= n; ++v) {
      int img = sigma[static_cast<std::size_t>(v - 1)];
      if (img == 0 || v == i) continue;
      auto [va, vb] = s.pair_at(v);
      if (va == i || vb == i) {
        auto [qa, qb] = s_prime.pair_at(img);
        if (j != qa && j != qb) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t slot) {
    if (slot == order.size()) return true;
    int i = order[slot];
    for (int j : candidates[slot]) {
      if (used[static_cast<std::size_t>(j - 1)]) continue;
      ++nodes;
      if (!consistent(i, j)) continue;
      sigma[static_cast<std::size_t>(i - 1)] = j;
      used[static_cast<std::size_t>(j - 1)] = true;
      if (dfs(slot + 1)) return true;
      sigma[static_cast<std::size_t>(i - 1)] = 0;
      used[static_cast<std::size_t>(j - 1)] = false;
    }
    return false;
  }

  std::optional<Permutation> run() {
    auto colors_s = vertex_colors(s);
    auto colors_p = vertex_colors(s_prime);
    {
      auto ms = colors_s;
      auto mp = colors_p;
      std::sort(ms.begin(), ms.end());
      std::sort(mp.begin(), mp.end());
      if (ms != mp) return std::nullopt;  // color multisets differ
    }

    std::map<std::array<int, 4>, std::vector<int>> by_color;
    for (int j = 1; j <= n; ++j) by_color[colors_p[static_cast<std::size_t>(j - 1)]].push_back(j);

    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      std::size_t cx = by_color[colors_s[static_cast<std::size_t>(x - 1)]].size();
      std::size_t cy = by_color[colors_s[static_cast<std::size_t>(y - 1)]].size();
      if (cx != cy) return cx < cy;
      return x < y;
    });
    candidates.clear();
    for (int i : order) candidates.push_back(by_color[colors_s[static_cast<std::size_t>(i - 1)]]);

    sigma.assign(static_cast<std::size_t>(n), 0);
    used.assign(static_cast<std::size_t>(n), false);
    if (!dfs(0)) return std::nullopt;
    return Permutation(sigma);
  }
};

}  // namespace

EquivalenceVerdict are_equivalent_verdict(const GromovStructure& s, const GromovStructure& s_prime) {
  if (s.point_count() != s_prime.point_count())
    throw Error(ErrorCode::SizeMismatch, "structures have different point counts");

  EquivalenceVerdict verdict;

  StructureMatrix g = matrix_rep(s);
  StructureMatrix g_prime = matrix_rep(s_prime);

  // invariant fast path, spectral comparisons first
  if (char_poly(g) != char_poly(g_prime)) {
    verdict.distinguishing_invariant = "char_poly";
    return verdict;
  }
  if (min_poly(g) != min_poly(g_prime)) {
    verdict.distinguishing_invariant = "min_poly";
    return verdict;
  }
  if (rank_rational(g) != rank_rational(g_prime)) {
    verdict.distinguishing_invariant = "rank";
    return verdict;
  }
  if (ends_count(g) != ends_count(g_prime)) {
    verdict.distinguishing_invariant = "ends";
    return verdict;
  }
  if (is_irreducible(g) != is_irreducible(g_prime)) {
    verdict.distinguishing_invariant = "irreducible";
    return verdict;
  }

  MatchSearch search(s, s_prime);
  std::optional<Permutation> sigma = search.run();
  verdict.search_nodes = search.nodes;
  if (!sigma) return verdict;

  if (apply_permutation(s, *sigma) != s_prime || !verify_similarity(g, *sigma, g_prime))
    throw Error(ErrorCode::InvariantViolation, "search returned an invalid permutation");
  verdict.equivalent = true;
  verdict.permutation = std::move(sigma);
  return verdict;
}

std::optional<Permutation> are_equivalent(const GromovStructure& s, const GromovStructure& s_prime) {
  return are_equivalent_verdict(s, s_prime).permutation;
}

std::optional<Permutation> brute_force_equiv(const GromovStructure& s,
                                             const GromovStructure& s_prime) {
  if (s.point_count() != s_prime.point_count())
    throw Error(ErrorCode::SizeMismatch, "structures have different point counts");
  int n = s.point_count();
  if (n > 8)
    throw Error(ErrorCode::SizeLimitExceeded, "brute force supports up to 8 points");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation sigma(images);
    if (apply_permutation(s, sigma) == s_prime) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

}  // namespace gromov
