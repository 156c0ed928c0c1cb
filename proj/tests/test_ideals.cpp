#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

namespace {

// Independent closure oracle: grow a plain std::set until stable.
std::set<Idx> closure_oracle(const FiniteRing& r, std::vector<Idx> gens) {
  std::set<Idx> s(gens.begin(), gens.end());
  s.insert(r.zero());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Idx> cur(s.begin(), s.end());
    for (Idx a : cur) {
      if (s.insert(r.neg(a)).second) changed = true;
      for (Idx b : cur)
        if (s.insert(r.add(a, b)).second) changed = true;
      for (Idx t = 0; t < r.size(); ++t)
        if (s.insert(r.mul(t, a)).second) changed = true;
    }
  }
  return s;
}

std::set<Idx> as_set(const Ideal& i) {
  auto v = i.elems.to_vector();
  return std::set<Idx>(v.begin(), v.end());
}

size_t divisor_count(int64_t n) {
  size_t c = 0;
  for (int64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

}  // namespace

TEST_CASE("principal ideals of Z/12") {
  FiniteRing r = make_zmod(12);
  CHECK(as_set(principal_ideal(r, 9)) == std::set<Idx>{0, 3, 6, 9});
  CHECK(as_set(principal_ideal(r, 4)) == std::set<Idx>{0, 4, 8});
  CHECK(as_set(principal_ideal(r, 6)) == std::set<Idx>{0, 6});
  CHECK(as_set(principal_ideal(r, 5)) == as_set(full_ideal(r)));
  CHECK(as_set(principal_ideal(r, 0)) == std::set<Idx>{0});
  CHECK(zero_ideal(r).card() == 1);
  CHECK(full_ideal(r).card() == 12);
}

TEST_CASE("generated ideals match the closure oracle") {
  FiniteRing r = make_zmod(12);
  CHECK(as_set(generated_ideal(r, {4, 6})) == std::set<Idx>{0, 2, 4, 6, 8, 10});
  CHECK(as_set(generated_ideal(r, {4, 6})) == closure_oracle(r, {4, 6}));
  CHECK(as_set(generated_ideal(r, {})) == std::set<Idx>{0});

  std::vector<FiniteRing> rings = {make_zmod(24),
                                   make_product({make_zmod(4), make_zmod(9)}),
                                   make_poly_quotient_int(make_zmod(6), {0, 0, 1})};
  for (const FiniteRing& rr : rings) {
    CAPTURE(rr.text());
    for (Idx g1 = 0; g1 < rr.size(); g1 += 5)
      for (Idx g2 = 1; g2 < rr.size(); g2 += 7) {
        Ideal gen = generated_ideal(rr, {g1, g2});
        CHECK(as_set(gen) == closure_oracle(rr, {g1, g2}));
        CHECK(ideal_equal(gen, ideal_sum(principal_ideal(rr, g1), principal_ideal(rr, g2))));
        CHECK(is_valid_ideal(gen));
      }
  }
}

TEST_CASE("sum and intersection on Z/12") {
  FiniteRing r = make_zmod(12);
  Ideal i4 = principal_ideal(r, 4);
  Ideal i6 = principal_ideal(r, 6);
  Ideal i2 = principal_ideal(r, 2);
  Ideal i3 = principal_ideal(r, 3);
  CHECK(ideal_equal(ideal_sum(i4, i6), i2));
  CHECK(as_set(ideal_intersect(i4, i6)) == std::set<Idx>{0});
  CHECK(as_set(ideal_intersect(i2, i3)) == std::set<Idx>{0, 6});
  CHECK(contains(i3, 9));
  CHECK_FALSE(contains(i3, 2));
}

TEST_CASE("ideal enumeration inside (9) in Z/12") {
  FiniteRing r = make_zmod(12);
  std::vector<Ideal> inside = enumerate_ideals_within(r, principal_ideal(r, 9));
  REQUIRE(inside.size() == 3);
  CHECK(as_set(inside[0]) == std::set<Idx>{0});
  CHECK(as_set(inside[1]) == std::set<Idx>{0, 6});
  CHECK(as_set(inside[2]) == std::set<Idx>{0, 3, 6, 9});
  for (const Ideal& i : inside) CHECK(is_valid_ideal(i));
}

TEST_CASE("ideal lattice of Z/n is the divisor lattice") {
  for (int64_t n = 2; n <= 40; ++n) {
    FiniteRing r = make_zmod(n);
    std::vector<Ideal> all = enumerate_ideals_within(r, full_ideal(r));
    CHECK(all.size() == divisor_count(n));
    // every ideal is principal, generated by a divisor
    for (const Ideal& i : all) {
      Idx least = 0;
      for (Idx a : i.elems.to_vector())
        if (a != 0) {
          least = a;
          break;
        }
      if (i.card() == 1) least = 0;
      CHECK(ideal_equal(i, principal_ideal(r, least)));
    }
  }
}

TEST_CASE("ideal lattice of a product multiplies") {
  FiniteRing r = make_product({make_zmod(4), make_zmod(9)});
  CHECK(enumerate_ideals_within(r, full_ideal(r)).size() == 9);
}

TEST_CASE("idempotent generators") {
  FiniteRing r = make_zmod(12);
  CHECK(idempotent_generator(r, principal_ideal(r, 4)) == 4);
  CHECK(idempotent_generator(r, principal_ideal(r, 9)) == 9);
  CHECK(idempotent_generator(r, principal_ideal(r, 6)) == std::nullopt);
  CHECK(idempotent_generator(r, principal_ideal(r, 2)) == std::nullopt);
  CHECK(idempotent_generator(r, full_ideal(r)) == 1);
  CHECK(idempotent_generator(r, zero_ideal(r)) == 0);
}

TEST_CASE("direct summands of Z/12") {
  FiniteRing r = make_zmod(12);
  CHECK(is_direct_summand(r, principal_ideal(r, 4)));
  CHECK(is_direct_summand(r, principal_ideal(r, 9)));
  CHECK(is_direct_summand(r, full_ideal(r)));
  CHECK(is_direct_summand(r, zero_ideal(r)));
  CHECK_FALSE(is_direct_summand(r, principal_ideal(r, 6)));
  CHECK_FALSE(is_direct_summand(r, principal_ideal(r, 2)));
}

TEST_CASE("summand and idempotent-generator routes agree on small rings") {
  // Independent implementations; for a principal ideal both answer whether
  // the ideal splits off.
  std::vector<FiniteRing> rings = {make_zmod(12), make_zmod(30), make_zmod(16),
                                   make_product({make_zmod(4), make_zmod(9)})};
  for (const FiniteRing& r : rings) {
    CAPTURE(r.text());
    for (Idx a = 0; a < r.size(); ++a) {
      Ideal i = principal_ideal(r, a);
      CHECK(is_direct_summand(r, i) == idempotent_generator(r, i).has_value());
    }
  }
}

TEST_CASE("oracle caps are enforced") {
  FiniteRing r = make_zmod(300);
  CHECK_THROWS_AS(enumerate_ideals_within(r, full_ideal(r)), OracleCapError);
  CHECK_THROWS_AS(is_direct_summand(r, principal_ideal(r, 2)), OracleCapError);
  // raising the cap unblocks the same call
  CHECK(enumerate_ideals_within(r, full_ideal(r), 300).size() == 18);
  CHECK_FALSE(is_direct_summand(r, principal_ideal(r, 2), 300));
}

TEST_CASE("is_valid_ideal rejects tampered sets") {
  FiniteRing r = make_zmod(12);
  Ideal good = principal_ideal(r, 4);
  CHECK(is_valid_ideal(good));

  Ideal no_zero = good;
  no_zero.elems.reset(0);
  CHECK_FALSE(is_valid_ideal(no_zero));

  Ideal extra = good;
  extra.elems.set(1);  // {0,1,4,8} is not closed under addition
  CHECK_FALSE(is_valid_ideal(extra));

  Ideal wrong_gens = principal_ideal(r, 2);
  wrong_gens.gens = {4};  // closure of {4} is (4), not (2)
  CHECK_FALSE(is_valid_ideal(wrong_gens));

  Ideal outside = good;
  outside.gens = {6};  // 6 is not in (4)
  CHECK_FALSE(is_valid_ideal(outside));
}
