#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

TEST_CASE("zmod bounds") {
  CHECK_THROWS_AS(make_zmod(1), RingError);
  CHECK_THROWS_AS(make_zmod(0), RingError);
  CHECK_THROWS_AS(make_zmod(-5), RingError);
  CHECK_THROWS_AS(make_zmod(5000), CapError);
  FiniteRing big = make_zmod(5000, 8192);  // above the table threshold
  CHECK(big.size() == 5000);
  CHECK(big.mul(4999, 4999) == 1);
  try {
    make_zmod(5000);
    FAIL("expected CapError");
  } catch (const CapError& e) {
    CHECK(e.computed_size == 5000);
    CHECK(e.cap == kDefaultRingCap);
  }
}

TEST_CASE("product encoding puts the first factor fastest") {
  FiniteRing r = make_product({make_zmod(4), make_zmod(9)});
  CHECK(r.size() == 36);
  CHECK(r.zero() == 0);
  CHECK(r.one() == 5);  // (1,1) = 1 + 4*1
  CHECK(r.decode(2) == Value::tuple({Value::of(2), Value::of(0)}));
  CHECK(r.format(2) == "(2,0)");

  auto enc = [&](int64_t a, int64_t b) {
    auto i = r.encode(Value::tuple({Value::of(a), Value::of(b)}));
    REQUIRE(i.has_value());
    return *i;
  };
  CHECK(enc(3, 5) == 3 + 4 * 5);
  // (3,5)*(2,7) = (6 mod 4, 35 mod 9) = (2,8)
  CHECK(r.mul(enc(3, 5), enc(2, 7)) == enc(2, 8));
  CHECK(r.add(enc(3, 5), enc(2, 7)) == enc(1, 3));
}

TEST_CASE("product arity and nesting") {
  CHECK_THROWS_AS(make_product({make_zmod(4)}), RingError);
  CHECK_THROWS_AS(make_product({}), RingError);

  FiniteRing flat = make_product({make_zmod(2), make_zmod(3), make_zmod(5)});
  CHECK(flat.size() == 30);
  CHECK(flat.text() == "Z/2 * Z/3 * Z/5");

  FiniteRing nested = make_product({make_zmod(2), make_product({make_zmod(3), make_zmod(5)})});
  CHECK(nested.size() == 30);
  CHECK(nested.text() == "Z/2 * (Z/3 * Z/5)");
  CHECK(nested.format(nested.one()) == "(1,(1,1))");
}

TEST_CASE("polynomial quotient over a prime field") {
  FiniteRing f4 = make_poly_quotient_int(make_zmod(2), {1, 1, 1});  // x^2+x+1
  CHECK(f4.size() == 4);
  CHECK(f4.text() == "Z/2[x]/(x^2+x+1)");
  Idx x = 2;  // coeffs (0,1), constant fastest
  CHECK(f4.format(x) == "x");
  CHECK(f4.mul(x, x) == 3);          // x^2 = x+1
  CHECK(f4.pow(x, 3) == f4.one());   // multiplicative order 3
  CHECK(units(f4).count() == 3);     // a field
  CHECK(is_reduced(f4));
  CHECK(has_exactly_two_idempotents(f4));

  FiniteRing dual = make_poly_quotient_int(make_zmod(2), {1, 0, 1});  // x^2+1 = (x+1)^2
  Idx xp1 = 3;
  CHECK(dual.mul(xp1, xp1) == dual.zero());
  CHECK_FALSE(is_reduced(dual));
}

TEST_CASE("polynomial quotient over a non-field base") {
  FiniteRing r = make_poly_quotient_int(make_zmod(6), {0, 0, 0, 1});  // x^3
  CHECK(r.size() == 216);
  CHECK(idempotents(r) == std::vector<Idx>{0, 1, 3, 4});  // constants 0,1,3,4
  CHECK(r.decode(3) == Value::tuple({Value::of(3), Value::of(0), Value::of(0)}));
  // x^3 = 0: element x has index 6 (coeffs (0,1,0)).
  CHECK(r.pow(6, 3) == 0);
  CHECK(r.pow(6, 2) == 36);
}

TEST_CASE("modulus must be monic after coefficient reduction") {
  CHECK_THROWS_WITH_AS(make_poly_quotient_int(make_zmod(6), {1, 0, 2}),
                       doctest::Contains("monic"), RingError);
  // 7*x^2 + x reduces to x^2 + x over Z/6, which is monic.
  FiniteRing r = make_poly_quotient_int(make_zmod(6), {0, 1, 7});
  CHECK(r.size() == 36);
  CHECK_THROWS_AS(make_poly_quotient_int(make_zmod(6), {1}), RingError);
  CHECK_THROWS_AS(make_poly_quotient_int(make_zmod(6), {0, 0}), RingError);
  CHECK_THROWS_AS(make_poly_quotient_int(make_zmod(6), {}), RingError);
}

TEST_CASE("quotient units match the generic scan") {
  // One pure-power modulus (structural constant-term rule), one reducible
  // modulus over a field (gcd rule), one generic fallback.
  std::vector<FiniteRing> rings;
  rings.push_back(make_poly_quotient_int(make_zmod(4), {0, 0, 1}));
  rings.push_back(make_poly_quotient_int(make_zmod(3), {2, 0, 1}));
  rings.push_back(make_poly_quotient_int(make_zmod(6), {1, 1, 1}));
  for (const FiniteRing& r : rings) {
    CAPTURE(r.text());
    std::vector<uint8_t> generic = kernels::unit_mask_serial(r);
    for (Idx a = 0; a < r.size(); ++a)
      CHECK(r.structure().units.test(a) == (generic[a] != 0));
  }
}

TEST_CASE("module realization") {
  FiniteRing a6 = make_zmod(6);

  FiniteModule free = make_module(a6, ModuleSpec{{ModuleComponentSpec{}}});
  CHECK(free.size() == 6);
  CHECK(check_module_axioms(free).empty());

  // (4) = (2) in Z/6, so A/(4) has 2 cosets.
  FiniteModule quot = make_module(a6, ModuleSpec{{ModuleComponentSpec{{4}}}});
  CHECK(quot.size() == 2);
  CHECK(check_module_axioms(quot).empty());
  CHECK(quot.scalar(3, 1) == 1);  // 3*[1] = [3] = [1] since 3-1=2 in (4)=(2)

  FiniteModule sum = make_module(
      a6, ModuleSpec{{ModuleComponentSpec{}, ModuleComponentSpec{{3}}}});
  CHECK(sum.size() == 18);  // 6 * |A/(3)| = 6 * 3
  CHECK(check_module_axioms(sum).empty());

  FiniteRing a4 = make_zmod(4);
  FiniteModule half = make_module(a4, ModuleSpec{{ModuleComponentSpec{{2}}}});
  CHECK(half.size() == 2);
  CHECK(half.scalar(2, 1) == 0);  // 2*[1] = [2] = [0]
}

TEST_CASE("trivial extension arithmetic") {
  FiniteRing a = make_zmod(4);
  FiniteModule e = make_module(a, ModuleSpec{{ModuleComponentSpec{{2}}}});
  FiniteRing t = make_trivial_extension(a, e);
  CHECK(t.size() == 8);
  CHECK(t.one() == 1);  // (1,0)
  // (1,1)^2 = (1, 1*1 + 1*1) = (1, 2*[1]) = (1, 0)
  Idx u = 1 + 4 * 1;
  CHECK(t.mul(u, u) == 1);
  CHECK(t.format(u) == "(1,1)");
  // (0,x)(0,y) = (0,0): the module part squares to zero.
  for (Idx x = 0; x < 2; ++x)
    for (Idx y = 0; y < 2; ++y)
      CHECK(t.mul(0 + 4 * x, 0 + 4 * y) == 0);
  CHECK(t.text() == "triv(Z/4, self/(2))");
}

TEST_CASE("trivial extension units come from the base") {
  FiniteRing a = make_zmod(6);
  FiniteModule e = make_module(a, ModuleSpec{{ModuleComponentSpec{}}});
  FiniteRing t = make_trivial_extension(a, e);
  CHECK(t.size() == 36);
  std::vector<uint8_t> generic = kernels::unit_mask_serial(t);
  for (Idx u = 0; u < t.size(); ++u) {
    CHECK(t.structure().units.test(u) == (generic[u] != 0));
    CHECK(t.structure().units.test(u) == is_unit(a, u % 6));
  }
  // Idempotents are exactly the base idempotents paired with zero.
  CHECK(idempotents(t) == std::vector<Idx>{0, 1, 3, 4});
}

TEST_CASE("trivial extension rejects a module over a different base") {
  FiniteRing a = make_zmod(6);
  FiniteRing b = make_zmod(6);  // equal but distinct carrier
  FiniteModule e = make_module(b, ModuleSpec{{ModuleComponentSpec{}}});
  CHECK_THROWS_AS(make_trivial_extension(a, e), RingError);
}

TEST_CASE("descriptors realize back to identical rings") {
  std::vector<FiniteRing> rings;
  rings.push_back(make_zmod(12));
  rings.push_back(make_product({make_zmod(4), make_zmod(9)}));
  rings.push_back(make_poly_quotient_int(make_zmod(2), {1, 1, 1}));
  {
    FiniteRing a = make_zmod(4);
    rings.push_back(make_trivial_extension(
        a, make_module(a, ModuleSpec{{ModuleComponentSpec{{2}}}})));
  }
  for (const FiniteRing& r : rings) {
    REQUIRE(r.descriptor() != nullptr);
    FiniteRing back = realize(r.descriptor());
    CHECK(back.size() == r.size());
    CHECK(back.text() == r.text());
    CHECK(idempotents(back) == idempotents(r));
    for (Idx a = 0; a < r.size(); a += 3)
      for (Idx b = 0; b < r.size(); b += 5) {
        CHECK(back.mul(a, b) == r.mul(a, b));
        CHECK(back.add(a, b) == r.add(a, b));
      }
  }
}

TEST_CASE("descriptor text is canonical") {
  CHECK(make_zmod(12).text() == "Z/12");
  FiniteRing q = make_poly_quotient_int(make_zmod(5), {3, 0, 4, 1});
  CHECK(q.text() == "Z/5[x]/(x^3+4*x^2+3)");
  FiniteRing a = make_zmod(6);
  FiniteRing t2 = make_trivial_extension(
      a, make_module(a, ModuleSpec{{ModuleComponentSpec{}, ModuleComponentSpec{}}}));
  CHECK(t2.text() == "triv(Z/6, self^2)");
  FiniteRing t3 = make_trivial_extension(
      a, make_module(a, ModuleSpec{{ModuleComponentSpec{}, ModuleComponentSpec{{2, 3}}}}));
  CHECK(t3.text() == "triv(Z/6, self (+) self/(2,3))");
  // A product base of a quotient needs parentheses to re-parse.
  FiniteRing pq = make_poly_quotient_int(make_product({make_zmod(2), make_zmod(3)}), {0, 0, 1});
  CHECK(pq.text() == "(Z/2 * Z/3)[x]/(x^2)");
}

TEST_CASE("size caps propagate through constructions") {
  CHECK_THROWS_AS(make_product({make_zmod(64), make_zmod(65)}), CapError);
  CHECK_THROWS_AS(make_poly_quotient_int(make_zmod(9), {0, 0, 0, 0, 1}), CapError);
  FiniteRing a = make_zmod(64);
  FiniteModule e = make_module(a, ModuleSpec{{ModuleComponentSpec{}}});
  CHECK_THROWS_AS(make_trivial_extension(a, e, 1024), CapError);
  CHECK(make_trivial_extension(a, e).size() == 4096);  // exactly at the cap
}
