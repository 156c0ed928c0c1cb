#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/common.hpp"

namespace ringlab {

bool is_prime(int64_t n);

// Prime-power factorization by trial division; primes ascending.
struct IntFactorization {
  std::vector<std::pair<int64_t, int>> factors;  // (prime, exponent >= 1)
  int64_t value() const;
  bool prime_power() const { return factors.size() == 1; }
  bool squarefree() const;
};

IntFactorization factor_int(int64_t n);  // requires n >= 2

// nZ is primary iff n is a prime power.
bool is_primary_int(int64_t n);

// Z/n is WVNR iff n is a prime power or n is squarefree.
bool zmod_wvnr_structural(int64_t n);

// Dense univariate polynomial over GF(p), coefficients ascending and
// reduced mod p with no trailing zeros.
struct GFpPoly {
  int64_t p = 2;
  std::vector<int64_t> c;

  static GFpPoly make(int64_t p, std::vector<int64_t> coeffs);
  static GFpPoly x_power(int64_t p, int k);

  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool monic() const { return !c.empty() && c.back() == 1; }
  int64_t leading() const { return c.empty() ? 0 : c.back(); }

  friend bool operator==(const GFpPoly& a, const GFpPoly& b) {
    return a.p == b.p && a.c == b.c;
  }
  friend bool operator<(const GFpPoly& a, const GFpPoly& b);
};

GFpPoly poly_mul(const GFpPoly& a, const GFpPoly& b);
// Quotient and remainder; the divisor's leading coefficient is inverted
// mod p.
std::pair<GFpPoly, GFpPoly> poly_divmod(const GFpPoly& a, const GFpPoly& b);
GFpPoly poly_gcd(const GFpPoly& a, const GFpPoly& b);  // monic gcd

// DSL-style text, descending powers ("x^2+x+1").
std::string poly_to_text(const GFpPoly& f);

struct PolyFactorization {
  int64_t unit = 1;  // scalar in GF(p)^*
  std::vector<std::pair<GFpPoly, int>> factors;  // monic irreducible, exponent
  bool prime_power() const { return factors.size() == 1; }
  bool squarefree() const;
};

// Exhaustive trial division by monic polynomials of ascending degree.
// Requires deg f >= 1.
PolyFactorization factor_poly(int64_t p, const GFpPoly& f);

bool poly_irreducible(int64_t p, const GFpPoly& f);

// (f) is primary iff f is a unit times a power of one irreducible.
bool is_primary_poly(int64_t p, const GFpPoly& f);

// GF(p)[x]/(f) is WVNR iff f is a prime power or squarefree.
bool polyquot_wvnr_structural(int64_t p, const GFpPoly& f);

// All monic polynomials of exactly the given degree, in ascending
// base-p counter order of the lower coefficients.
std::vector<GFpPoly> monic_polys_of_degree(int64_t p, int degree);

}  // namespace ringlab
