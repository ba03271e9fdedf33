#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/equivalence.hpp"
#include "core/errors.hpp"
#include "core/reference.hpp"
#include "oracles.hpp"

using namespace gromov;
using gromov::testing::random_permutation;
using gromov::testing::sample_structures;
using gromov::testing::structure_of;

namespace {

const GromovStructure kS1 = structure_of("125 213 324 435 514");
const GromovStructure kS2 = structure_of("125 213 325 425 514");
const GromovStructure kS3 = structure_of("124 213 324 413 513");

}  // namespace

TEST_CASE("canonical form is idempotent with an identity witness") {
  for (const auto& s : sample_structures(6, 10, 8)) {
    CanonicalForm first = canonical_form(s);
    CanonicalForm again = canonical_form(first.structure);
    CHECK(again.structure == first.structure);
    CHECK(again.witness.is_identity());
    // witness maps the input onto the canonical structure
    CHECK(apply_permutation(s, first.witness) == first.structure);
    // canonical is minimal: no smaller than the input itself
    CHECK(!(s < first.structure));
  }
}

TEST_CASE("canonicalization collapses relabelings") {
  SplitMix64 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    Permutation sigma = random_permutation(5, rng);
    CHECK(canonical_form(apply_permutation(kS1, sigma)).structure ==
          canonical_form(kS1).structure);
  }
}

TEST_CASE("the three five-point classes have distinct canonical forms") {
  std::set<std::string> keys{canonical_form(kS1).structure.flat_key(),
                             canonical_form(kS2).structure.flat_key(),
                             canonical_form(kS3).structure.flat_key()};
  CHECK(keys.size() == 3);
}

TEST_CASE("canonical search refuses oversized inputs") {
  int n = 13;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    int a = i % n + 1, b = (i + 1) % n + 1;
    pairs.push_back({a, b});
  }
  GromovStructure big(n, std::move(pairs));
  CHECK_THROWS_AS(canonical_form(big), Error);
}

TEST_CASE("verify_similarity checks G P = P G'") {
  StructureMatrix g = matrix_rep(kS2);
  CHECK(verify_similarity(g, Permutation::identity(5), g));

  // exhaustively: no permutation intertwines S_2 with S_3
  StructureMatrix g3 = matrix_rep(kS3);
  std::vector<int> images{1, 2, 3, 4, 5};
  do {
    CHECK_FALSE(verify_similarity(g, Permutation(images), g3));
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST_CASE("positive equivalence: constructed relabelings are recovered") {
  SplitMix64 rng(31);
  for (int n : {5, 6, 7}) {
    for (const auto& s : sample_structures(n, 10, 70 + n)) {
      Permutation sigma = random_permutation(n, rng);
      GromovStructure moved = apply_permutation(s, sigma);
      EquivalenceVerdict v = are_equivalent_verdict(s, moved);
      REQUIRE(v.equivalent);
      REQUIRE(v.permutation.has_value());
      // the found permutation need not be sigma, but must work
      CHECK(apply_permutation(s, *v.permutation) == moved);
      CHECK(verify_similarity(matrix_rep(s), *v.permutation, matrix_rep(moved)));
    }
  }
}

TEST_CASE("S_2 vs S_3: isospectral, separated by the minimal polynomial") {
  EquivalenceVerdict v = are_equivalent_verdict(kS2, kS3);
  CHECK_FALSE(v.equivalent);
  REQUIRE(v.distinguishing_invariant.has_value());
  CHECK(*v.distinguishing_invariant == "min_poly");
}

TEST_CASE("R_1 vs R_3: identical fingerprints, separated only by search") {
  GromovStructure r1 = structure_of("124 213 324 413 513 613");
  GromovStructure r3 = structure_of("124 213 324 413 513 624");
  CHECK(fingerprint(r1) == fingerprint(r3));
  EquivalenceVerdict v = are_equivalent_verdict(r1, r3);
  CHECK_FALSE(v.equivalent);
  CHECK_FALSE(v.distinguishing_invariant.has_value());
}

TEST_CASE("brute force agrees with the pruned search") {
  // the three five-point classes are pairwise inequivalent
  const GromovStructure* cls[] = {&kS1, &kS2, &kS3};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      CHECK_FALSE(brute_force_equiv(*cls[i], *cls[j]).has_value());
      CHECK_FALSE(are_equivalent(*cls[i], *cls[j]).has_value());
    }
    auto self = brute_force_equiv(*cls[i], *cls[i]);
    REQUIRE(self.has_value());
    CHECK(self->is_identity());
  }

  // random pairs at n = 6: relabelings and unrelated samples
  SplitMix64 rng(12);
  auto pool = sample_structures(6, 24, 444);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    const GromovStructure& a = pool[i];
    GromovStructure b = (i % 4 == 0) ? apply_permutation(a, random_permutation(6, rng))
                                     : pool[i + 1];
    bool brute = brute_force_equiv(a, b).has_value();
    bool fast = are_equivalent(a, b).has_value();
    CHECK(brute == fast);
  }
}

TEST_CASE("canonical forms decide equivalence") {
  SplitMix64 rng(77);
  auto pool = sample_structures(6, 20, 555);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    const GromovStructure& a = pool[i];
    GromovStructure b = (i % 4 == 0) ? apply_permutation(a, random_permutation(6, rng))
                                     : pool[i + 1];
    bool equivalent = are_equivalent(a, b).has_value();
    bool same_canon = canonical_form(a).structure == canonical_form(b).structure;
    CHECK(equivalent == same_canon);
  }
}

TEST_CASE("equivalent structures always share fingerprints") {
  SplitMix64 rng(123);
  for (const auto& s : sample_structures(6, 15, 666)) {
    GromovStructure moved = apply_permutation(s, random_permutation(6, rng));
    CHECK(fingerprint(s) == fingerprint(moved));
  }
}

TEST_CASE("size mismatches are rejected") {
  CHECK_THROWS_AS(are_equivalent_verdict(kS1, structure_of("124 213 324 413")), Error);
  CHECK_THROWS_AS(brute_force_equiv(kS1, structure_of("124 213 324 413")), Error);
}

TEST_CASE("brute force refuses more than 8 points") {
  auto pool = sample_structures(9, 2, 31);
  CHECK_THROWS_AS(brute_force_equiv(pool[0], pool[1]), Error);
}
