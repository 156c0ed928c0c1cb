#pragma once

#include <optional>
#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/common.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// An ideal as a dense element set plus the generators that produced it.
// Invariant: elems is the closure of gens (contains zero, closed under
// addition, negation, and multiplication by the whole ring).
struct Ideal {
  FiniteRing ring;
  DenseSet elems;
  std::vector<Idx> gens;

  size_t card() const { return elems.count(); }
  bool is_whole_ring() const { return card() == ring.size(); }
};

Ideal zero_ideal(const FiniteRing& r);
Ideal full_ideal(const FiniteRing& r);

// {r*a : r in R}
Ideal principal_ideal(const FiniteRing& r, Idx a);

// Smallest ideal containing gens: union of the generators' principal
// ideals, closed under pairwise addition to fixpoint.
Ideal generated_ideal(const FiniteRing& r, const std::vector<Idx>& gens);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
bool ideal_equal(const Ideal& i, const Ideal& j);
bool contains(const Ideal& i, Idx a);

// All ideals of R contained in J, computed as the closure under ideal_sum
// of the principal ideals of J's elements (complete in a finite ring, where
// every ideal is a finite sum of principal ideals). Output is deduplicated
// and sorted by (cardinality, lexicographic bitset). Refuses |J| above the
// oracle cap.
std::vector<Ideal> enumerate_ideals_within(const FiniteRing& r, const Ideal& j,
                                           size_t oracle_cap = kDefaultOracleCap);

// Some idempotent f with I = Rf, least dense index first; absence is a
// legal return.
std::optional<Idx> idempotent_generator(const FiniteRing& r, const Ideal& i);

// True iff some ideal K satisfies I + K = R and I intersect K = {0}.
// Searches K over the full ideal lattice; deliberately independent of
// idempotent_generator. Refuses rings above the oracle cap.
bool is_direct_summand(const FiniteRing& r, const Ideal& i,
                       size_t oracle_cap = kDefaultOracleCap);

// Invariant check used by tests and witness re-verification.
bool is_valid_ideal(const Ideal& i);

}  // namespace ringlab
