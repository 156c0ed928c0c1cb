#include "ringlab/ideals.hpp"

#include <algorithm>

namespace ringlab {

namespace {

// Additive closure of a set already closed under ring multiplication and
// negation (a union of principal ideals). The result is then an ideal.
DenseSet additive_closure(const FiniteRing& r, DenseSet seed) {
  std::vector<Idx> elems = seed.to_vector();
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      Idx s = r.add(elems[i], elems[j]);
      if (!seed.test(s)) {
        seed.set(s);
        elems.push_back(s);
      }
    }
  return seed;
}

DenseSet principal_set(const FiniteRing& r, Idx a) {
  DenseSet out(r.size());
  for (Idx x = 0; x < r.size(); ++x) out.set(r.mul(x, a));
  return out;
}

DenseSet sum_sets(const FiniteRing& r, const DenseSet& a, const DenseSet& b) {
  DenseSet out(r.size());
  auto av = a.to_vector();
  auto bv = b.to_vector();
  for (Idx x : av)
    for (Idx y : bv) out.set(r.add(x, y));
  return out;
}

Ideal from_set(const FiniteRing& r, DenseSet elems) {
  Ideal out{r, std::move(elems), {}};
  out.gens = out.elems.to_vector();
  return out;
}

}  // namespace

Ideal zero_ideal(const FiniteRing& r) {
  DenseSet e(r.size());
  e.set(r.zero());
  return Ideal{r, std::move(e), {r.zero()}};
}

Ideal full_ideal(const FiniteRing& r) {
  DenseSet e(r.size());
  for (Idx a = 0; a < r.size(); ++a) e.set(a);
  return Ideal{r, std::move(e), {r.one()}};
}

Ideal principal_ideal(const FiniteRing& r, Idx a) {
  return Ideal{r, principal_set(r, a), {a}};
}

Ideal generated_ideal(const FiniteRing& r, const std::vector<Idx>& gens) {
  DenseSet seed(r.size());
  seed.set(r.zero());
  for (Idx g : gens) seed |= principal_set(r, g);
  return Ideal{r, additive_closure(r, std::move(seed)), gens};
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  Ideal out{i.ring, sum_sets(i.ring, i.elems, j.elems), i.gens};
  out.gens.insert(out.gens.end(), j.gens.begin(), j.gens.end());
  return out;
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  DenseSet e = i.elems;
  e &= j.elems;
  return from_set(i.ring, std::move(e));
}

bool ideal_equal(const Ideal& i, const Ideal& j) { return i.elems == j.elems; }

bool contains(const Ideal& i, Idx a) { return i.elems.test(a); }

std::vector<Ideal> enumerate_ideals_within(const FiniteRing& r, const Ideal& j,
                                           size_t oracle_cap) {
  if (j.card() > oracle_cap) throw OracleCapError(j.card(), oracle_cap);

  std::vector<DenseSet> found;
  auto add_if_new = [&](const DenseSet& s) {
    for (const auto& f : found)
      if (f == s) return false;
    found.push_back(s);
    return true;
  };

  for (Idx a : j.elems.to_vector()) add_if_new(principal_set(r, a));

  // close under pairwise sums to a fixpoint; every ideal inside J is a sum
  // of principal ideals of its own elements
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t k = 0; k <= i; ++k) add_if_new(sum_sets(r, found[i], found[k]));

  std::sort(found.begin(), found.end(), [](const DenseSet& a, const DenseSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.lex_less(b);
  });

  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(from_set(r, std::move(s)));
  return out;
}

std::optional<Idx> idempotent_generator(const FiniteRing& r, const Ideal& i) {
  const auto& idem = r.structure().idempotent_set;
  for (Idx e = 0; e < r.size(); ++e) {
    if (!i.elems.test(e) || !idem.test(e)) continue;
    if (principal_set(r, e) == i.elems) return e;
  }
  return std::nullopt;
}

bool is_direct_summand(const FiniteRing& r, const Ideal& i, size_t oracle_cap) {
  if (r.size() > oracle_cap) throw OracleCapError(r.size(), oracle_cap);
  DenseSet zero_only(r.size());
  zero_only.set(r.zero());

  for (const Ideal& k : enumerate_ideals_within(r, full_ideal(r), oracle_cap)) {
    DenseSet meet = i.elems;
    meet &= k.elems;
    if (!(meet == zero_only)) continue;
    if (sum_sets(r, i.elems, k.elems).count() == r.size()) return true;
  }
  return false;
}

bool is_valid_ideal(const Ideal& i) {
  const FiniteRing& r = i.ring;
  if (!i.elems.test(r.zero())) return false;
  auto elems = i.elems.to_vector();
  for (Idx a : elems) {
    if (!i.elems.test(r.neg(a))) return false;
    for (Idx b : elems)
      if (!i.elems.test(r.add(a, b))) return false;
    for (Idx x = 0; x < r.size(); ++x)
      if (!i.elems.test(r.mul(x, a))) return false;
  }
  for (Idx g : i.gens)
    if (!i.elems.test(g)) return false;
  return generated_ideal(r, i.gens).elems == i.elems;
}

}  // namespace ringlab
