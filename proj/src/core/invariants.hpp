#pragma once

#include <vector>

#include "core/polynomial.hpp"
#include "core/rational.hpp"
#include "core/structure.hpp"

namespace gromov {

// Rank over the rationals, by fraction-free (Bareiss) elimination.
int rank_rational(const StructureMatrix& g);

// Exact traces of G^1 .. G^n.
std::vector<BigInt> trace_powers(const StructureMatrix& g);

// Monic characteristic polynomial det(tI - G), by the Faddeev-LeVerrier
// recurrence in exact integer arithmetic (every division is exact).
IntPoly char_poly(const StructureMatrix& g);

// Monic minimal polynomial: the first linear dependence among the
// vectorized powers I, G, G^2, ... found by exact elimination. Verified by
// substituting G and by exact division into the characteristic polynomial.
RatPoly min_poly(const StructureMatrix& g);

// Number of ones in D = G - floor((G + G^t)/2): the non-mutual arrows.
int ends_count(const StructureMatrix& g);

// True iff the digraph i -> {a_i, b_i} is strongly connected. Also computes
// P = I + G + ... + G^n and checks entrywise positivity; the two criteria
// must agree (InvariantViolation otherwise).
bool is_irreducible(const StructureMatrix& g);

struct InvariantFingerprint {
  int n = 0;
  int rank = 0;
  std::vector<BigInt> trace_powers;
  IntPoly char_poly;
  RatPoly min_poly;
  int ends = 0;
  bool irreducible = false;
  int removed_edge_count = 0;

  bool operator==(const InvariantFingerprint& other) const = default;
};

// Bundles all invariants. Construction cross-checks:
//   - ends is even,
//   - trace powers satisfy Newton's identities against the characteristic
//     polynomial,
//   - the minimal polynomial divides the characteristic polynomial.
// rank and removed_edge_count agree on every structure with n <= 6; from
// n = 7 on, removed-edge sets containing an even cycle are realizable and
// rank-deficient, so the two fields are carried separately.
InvariantFingerprint fingerprint(const GromovStructure& s);

}  // namespace gromov
