#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/invariants.hpp"
#include "core/structure.hpp"

namespace gromov {

// Relabelings are searched up to this size; beyond it the factorial search
// space is refused outright.
inline constexpr int kMaxCanonicalPoints = 12;

struct CanonicalForm {
  GromovStructure structure;  // lexicographically least relabeling
  Permutation witness;        // apply_permutation(input, witness) == structure
};

// Minimizes the flattened (a_1,b_1,...,a_n,b_n) sequence over all vertex
// relabelings. Idempotent: canonical input comes back unchanged with the
// identity witness.
CanonicalForm canonical_form(const GromovStructure& s);

// Checks the similarity identity G * P == P * G' entrywise, where
// P(i, sigma(i)) = 1.
bool verify_similarity(const StructureMatrix& g, const Permutation& sigma,
                       const StructureMatrix& g_prime);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<Permutation> permutation;
  // set when unequal fingerprints decided the verdict without a search;
  // one of "char_poly", "min_poly", "rank", "ends", "irreducible"
  std::optional<std::string> distinguishing_invariant;
  std::uint64_t search_nodes = 0;
};

// Full verdict: fingerprint fast path first, then a backtracking search over
// label assignments pruned by vertex-local invariants. Any permutation
// found is verified with verify_similarity before being returned.
EquivalenceVerdict are_equivalent_verdict(const GromovStructure& s, const GromovStructure& s_prime);

// Just the permutation, if one exists.
std::optional<Permutation> are_equivalent(const GromovStructure& s, const GromovStructure& s_prime);

// Exhaustive n! baseline; the oracle the pruned search is tested against.
// Limited to n <= 8.
std::optional<Permutation> brute_force_equiv(const GromovStructure& s,
                                             const GromovStructure& s_prime);

}  // namespace gromov
