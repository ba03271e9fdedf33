#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/equivalence.hpp"
#include "core/errors.hpp"
#include "core/structure.hpp"
#include "oracles.hpp"

using namespace gromov;
using gromov::testing::random_permutation;
using gromov::testing::sample_structures;
using gromov::testing::structure_of;

namespace {

std::vector<std::string> rows_of(const StructureMatrix& g) {
  std::vector<std::string> rows;
  for (int i = 1; i <= g.dim(); ++i) {
    std::string r;
    for (int j = 1; j <= g.dim(); ++j) r += g.at(i, j) ? '1' : '0';
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("matrix representation matches the published matrices") {
  CHECK(rows_of(matrix_rep(structure_of("124 213 324 413"))) ==
        std::vector<std::string>{"0101", "1010", "0101", "1010"});

  CHECK(rows_of(matrix_rep(structure_of("125 213 325 425 514"))) ==
        std::vector<std::string>{"01001", "10100", "01001", "01001", "10010"});

  CHECK(rows_of(matrix_rep(structure_of("123 213 312"))) ==
        std::vector<std::string>{"011", "101", "110"});
}

TEST_CASE("row sums are two, diagonal zero") {
  for (const auto& s : sample_structures(6, 25, 41)) {
    StructureMatrix g = matrix_rep(s);
    for (int i = 1; i <= 6; ++i) {
      int sum = 0;
      for (int j = 1; j <= 6; ++j) sum += g.at(i, j);
      CHECK(sum == 2);
      CHECK(g.at(i, i) == 0);
    }
  }
}

TEST_CASE("removed edges deduplicate pairs") {
  auto e4 = removed_edges(structure_of("124 213 324 413"));
  CHECK(e4 == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});

  auto e5 = removed_edges(structure_of("125 213 325 425 514"));
  CHECK(e5 == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 5}});

  auto r1 = removed_edges(structure_of("124 213 324 413 513 613"));
  CHECK(r1.size() == 2);
}

TEST_CASE("pendant-free adjacency") {
  // for the four-point structure it coincides with the structure matrix
  auto adj4 = pendant_free_adjacency(structure_of("124 213 324 413"));
  StructureMatrix g4 = matrix_rep(structure_of("124 213 324 413"));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(adj4[i - 1][j - 1] == g4.at(i, j));

  // A_{S_3} as printed
  auto adj = pendant_free_adjacency(structure_of("124 213 324 413 513"));
  std::vector<std::string> rows;
  for (const auto& row : adj) {
    std::string r;
    for (int v : row) r += v ? '1' : '0';
    rows.push_back(r);
  }
  CHECK(rows == std::vector<std::string>{"01011", "10101", "01011", "10101", "11110"});

  // all three edges of K_3 get removed
  auto adj3 = pendant_free_adjacency(structure_of("123 213 312"));
  for (const auto& row : adj3)
    for (int v : row) CHECK(v == 0);
}

TEST_CASE("edge count of the reduction") {
  for (const auto& s : sample_structures(7, 20, 17)) {
    auto adj = pendant_free_adjacency(s);
    int edges = 0;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) edges += adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    CHECK(edges == 21 - static_cast<int>(removed_edges(s).size()));
  }
}

TEST_CASE("chain/cycle decomposition of the four-point structure") {
  auto d = decompose_chains_cycles(structure_of("124 213 324 413"));
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].kind == ChainCycleComponent::Kind::Cycle);
  CHECK(d.components[0].vertices == std::vector<int>{1, 2, 3, 4});
  CHECK(d.components[0].end_arrows.empty());
  CHECK(d.chain_count() == 0);
  CHECK(d.end_arrow_count() == 0);
}

TEST_CASE("decomposition of R_1: a 4-cycle plus two isolated chains") {
  auto d = decompose_chains_cycles(structure_of("124 213 324 413 513 613"));
  REQUIRE(d.components.size() == 3);
  CHECK(d.components[0].kind == ChainCycleComponent::Kind::Cycle);
  CHECK(d.components[0].vertices == std::vector<int>{1, 2, 3, 4});
  CHECK(d.components[1].vertices == std::vector<int>{5});
  CHECK(d.components[1].end_arrows ==
        std::vector<std::pair<int, int>>{{5, 1}, {5, 3}});
  CHECK(d.components[2].vertices == std::vector<int>{6});
  CHECK(d.end_arrow_count() == 4);
  CHECK(d.chain_count() == 2);
}

TEST_CASE("decomposition of I_17: cycles only") {
  auto d = decompose_chains_cycles(structure_of("126 213 324 435 546 615"));
  CHECK(d.chain_count() == 0);
  CHECK(d.end_arrow_count() == 0);
  for (const auto& comp : d.components) CHECK(comp.kind == ChainCycleComponent::Kind::Cycle);
}

TEST_CASE("decomposition properties on random structures") {
  for (int n : {5, 6, 8}) {
    for (const auto& s : sample_structures(n, 40, 1000 + n)) {
      auto d = decompose_chains_cycles(s);
      std::set<int> seen;
      for (const auto& comp : d.components) {
        for (int v : comp.vertices) CHECK(seen.insert(v).second);
        int expected = comp.kind == ChainCycleComponent::Kind::Chain ? 2 : 0;
        CHECK(static_cast<int>(comp.end_arrows.size()) == expected);
      }
      CHECK(static_cast<int>(seen.size()) == n);
      CHECK(d.end_arrow_count() == 2 * d.chain_count());
    }
  }
}

TEST_CASE("applying permutations") {
  GromovStructure s4 = structure_of("124 213 324 413");
  CHECK(apply_permutation(s4, Permutation::identity(4)) == s4);

  // the cyclic shift fixes this structure
  Permutation shift(std::vector<int>{2, 3, 4, 1});
  CHECK(apply_permutation(s4, shift) == s4);

  GromovStructure s2 = structure_of("125 213 325 425 514");
  Permutation swap34(std::vector<int>{1, 2, 4, 3, 5});
  CHECK(apply_permutation(s2, swap34) == structure_of("125 214 325 425 513"));

  CHECK_THROWS_AS(apply_permutation(s4, Permutation::identity(5)), Error);
}

TEST_CASE("permutation invariants: removed edges and end arrows") {
  SplitMix64 rng(2024);
  for (const auto& s : sample_structures(6, 30, 77)) {
    Permutation sigma = random_permutation(6, rng);
    GromovStructure moved = apply_permutation(s, sigma);
    CHECK(removed_edges(moved).size() == removed_edges(s).size());
    CHECK(decompose_chains_cycles(moved).end_arrow_count() ==
          decompose_chains_cycles(s).end_arrow_count());
  }
}

TEST_CASE("restriction") {
  GromovStructure r1 = structure_of("124 213 324 413 513 613");
  CHECK(restrict(r1, {1, 2, 3, 4}) == structure_of("124 213 324 413"));
  CHECK(restrict(r1, {1, 2, 3, 4, 5, 6}) == r1);

  GromovStructure i1 = structure_of("124 213 324 456 524 624");
  try {
    restrict(i1, {1, 2, 3, 4});
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
    CHECK(e.detail() == std::vector<int>{4});
  }

  CHECK_THROWS_AS(restrict(r1, {1, 2}), Error);
}

TEST_CASE("structure text and JSON round trips") {
  GromovStructure s = structure_of("125 213 325 425 514");
  CHECK(parse_structure(format_structure(s)) == s);
  CHECK(parse_structure(format_structure_json(s)) == s);

  CHECK(format_structure(structure_of("123 213 312")) == "1: 2 3\n2: 1 3\n3: 1 2\n");
}

TEST_CASE("structure parsing rejects invariant violations") {
  CHECK_THROWS_AS(parse_structure("1: 1 2\n2: 1 3\n3: 1 2"), Error);   // i in pair
  CHECK_THROWS_AS(parse_structure("1: 2 2\n2: 1 3\n3: 1 2"), Error);   // a == b
  CHECK_THROWS_AS(parse_structure("1: 2 3\n3: 1 2"), Error);           // missing row
  CHECK_THROWS_AS(parse_structure("1: 2 3\n1: 2 3\n3: 1 2"), Error);   // duplicate row
  CHECK_THROWS_AS(parse_structure("1: 2 9\n2: 1 3\n3: 1 2"), Error);   // out of range
  CHECK_THROWS_AS(parse_structure("[[1,1,2],[2,1,3],[3,1,2]]"), Error);
  CHECK_THROWS_AS(parse_structure(""), Error);
  CHECK_THROWS_AS(parse_structure("1: 2 3 4\n2: 1 3\n3: 1 2"), Error);
}
