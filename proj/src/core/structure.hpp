#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gromov {

// Assignment, for each vertex i, of an unordered pair {a_i, b_i} of other
// vertices (the pair whose connecting edge is realized through i). Pairs are
// stored sorted; vertices are 1-based everywhere in this API.
class GromovStructure {
 public:
  // pairs[i-1] = {a_i, b_i}. Validates a != b, i not in {a, b}, range 1..n.
  GromovStructure(int n, std::vector<std::pair<int, int>> pairs);

  int point_count() const { return n_; }
  const std::pair<int, int>& pair_at(int i) const { return pairs_[i - 1]; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  // 2n bytes, 0-based targets, vertex-major. Lexicographic order on these
  // keys equals lexicographic order on the flattened (a_1,b_1,...,a_n,b_n)
  // sequence, which is the ordering used for canonical representatives.
  std::string flat_key() const;

  bool operator==(const GromovStructure& other) const = default;
  bool operator<(const GromovStructure& other) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

// Text format: one line per vertex, "i: a b". JSON alternative: [[i,a,b],...].
// Auto-detects by the first non-space byte.
GromovStructure parse_structure(std::string_view text);
std::string format_structure(const GromovStructure& s);
std::string format_structure_json(const GromovStructure& s);

// 0/1 matrix with G(i,j) = 1 iff j is in {a_i, b_i}; exactly two ones per
// row, zero diagonal.
class StructureMatrix {
 public:
  explicit StructureMatrix(const GromovStructure& s);

  int dim() const { return n_; }
  int at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  bool operator==(const StructureMatrix& other) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> entries_;
};

StructureMatrix matrix_rep(const GromovStructure& s);

// Distinct pairs {a_i, b_i}, sorted.
std::vector<std::pair<int, int>> removed_edges(const GromovStructure& s);

// Adjacency of the complete graph minus the removed edges.
std::vector<std::vector<int>> pendant_free_adjacency(const GromovStructure& s);

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // images[i-1] = sigma(i)
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& other) const = default;

 private:
  Permutation() = default;
  std::vector<int> images_;
};

// Relabels: result assigns sigma(i) -> {sigma(a_i), sigma(b_i)}.
GromovStructure apply_permutation(const GromovStructure& s, const Permutation& sigma);

// Components of the mutual-link graph (edge i~j iff j in {a_i,b_i} and
// i in {a_j,b_j}). Every vertex has mutual degree <= 2, so components are
// paths ("chains") or cycles. A chain of any length has exactly two
// non-mutual arrows leaving it (an isolated vertex contributes both of its
// arrows); a cycle has none.
struct ChainCycleComponent {
  enum class Kind { Chain, Cycle };
  Kind kind;
  std::vector<int> vertices;                      // walk order
  std::vector<std::pair<int, int>> end_arrows;    // (vertex, target)
};

struct ChainCycleDecomposition {
  std::vector<ChainCycleComponent> components;

  int chain_count() const;
  int end_arrow_count() const;
};

ChainCycleDecomposition decompose_chains_cycles(const GromovStructure& s);

// Restriction to a vertex subset; succeeds iff the subset is closed under
// the pair assignment. Vertices are relabeled 1..|subset| by increasing
// original index.
GromovStructure restrict(const GromovStructure& s, const std::vector<int>& subset);

}  // namespace gromov
