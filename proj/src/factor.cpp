#include "ringlab/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringlab {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int64_t IntFactorization::value() const {
  int64_t v = 1;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

bool IntFactorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const auto& f) { return f.second == 1; });
}

IntFactorization factor_int(int64_t n) {
  if (n < 2) throw RingError("factor_int requires n >= 2");
  IntFactorization out;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

bool is_primary_int(int64_t n) { return n >= 2 && factor_int(n).prime_power(); }

bool zmod_wvnr_structural(int64_t n) {
  auto f = factor_int(n);
  return f.prime_power() || f.squarefree();
}

// ------------------------------------------------------------- GF(p)[x] ----

namespace {

int64_t mod_pos(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

int64_t inv_mod(int64_t a, int64_t p) {
  // p is prime and a nonzero mod p
  int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  return mod_pos(t, p);
}

}  // namespace

GFpPoly GFpPoly::make(int64_t p, std::vector<int64_t> coeffs) {
  GFpPoly out;
  out.p = p;
  out.c = std::move(coeffs);
  for (auto& v : out.c) v = mod_pos(v, p);
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

GFpPoly GFpPoly::x_power(int64_t p, int k) {
  std::vector<int64_t> c(static_cast<size_t>(k) + 1, 0);
  c.back() = 1;
  return make(p, std::move(c));
}

bool operator<(const GFpPoly& a, const GFpPoly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(),
                                      b.c.rend());
}

GFpPoly poly_mul(const GFpPoly& a, const GFpPoly& b) {
  if (a.zero() || b.zero()) return GFpPoly::make(a.p, {});
  std::vector<int64_t> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = mod_pos(c[i + j] + a.c[i] * b.c[j], a.p);
  return GFpPoly::make(a.p, std::move(c));
}

std::pair<GFpPoly, GFpPoly> poly_divmod(const GFpPoly& a, const GFpPoly& b) {
  if (b.zero()) throw RingError("polynomial division by zero");
  const int64_t p = a.p;
  std::vector<int64_t> rem = a.c;
  std::vector<int64_t> quot(a.c.size() > b.c.size() - 1 ? a.c.size() - b.c.size() + 1 : 0,
                            0);
  int64_t lead_inv = inv_mod(b.leading(), p);
  while (rem.size() >= b.c.size()) {
    // rem carries no trailing zeros, so the top coefficient is nonzero
    int64_t q = mod_pos(rem.back() * lead_inv, p);
    size_t shift = rem.size() - b.c.size();
    quot[shift] = q;
    for (size_t j = 0; j < b.c.size(); ++j)
      rem[shift + j] = mod_pos(rem[shift + j] - q * b.c[j], p);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {GFpPoly::make(p, std::move(quot)), GFpPoly::make(p, std::move(rem))};
}

GFpPoly poly_gcd(const GFpPoly& a, const GFpPoly& b) {
  GFpPoly x = a, y = b;
  while (!y.zero()) {
    GFpPoly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.zero() && x.leading() != 1) {
    int64_t s = inv_mod(x.leading(), x.p);
    for (auto& v : x.c) v = mod_pos(v * s, x.p);
  }
  return x;
}

std::string poly_to_text(const GFpPoly& f) {
  if (f.zero()) return "0";
  std::string out;
  for (size_t i = f.c.size(); i-- > 0;) {
    int64_t c = f.c[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
      out += c == 1 ? xs : std::to_string(c) + "*" + xs;
    }
  }
  return out;
}

bool PolyFactorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const auto& f) { return f.second == 1; });
}

PolyFactorization factor_poly(int64_t p, const GFpPoly& f) {
  if (f.degree() < 1) throw RingError("factor_poly requires degree >= 1");
  PolyFactorization out;
  GFpPoly rest = f;
  out.unit = rest.leading();
  if (out.unit != 1) {
    int64_t s = inv_mod(out.unit, p);
    for (auto& v : rest.c) v = mod_pos(v * s, p);
  }

  for (int d = 1; rest.degree() >= 1 && d <= rest.degree(); ++d) {
    for (const GFpPoly& cand : monic_polys_of_degree(p, d)) {
      if (rest.degree() < d) break;
      int e = 0;
      while (true) {
        auto [q, r] = poly_divmod(rest, cand);
        if (!r.zero()) break;
        rest = std::move(q);
        ++e;
      }
      // trial division in ascending degree order only ever splits off
      // irreducible factors
      if (e > 0) out.factors.emplace_back(cand, e);
    }
  }
  if (rest.degree() >= 1) out.factors.emplace_back(rest, 1);
  return out;
}

bool poly_irreducible(int64_t p, const GFpPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_poly(p, f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

bool is_primary_poly(int64_t p, const GFpPoly& f) {
  return f.degree() >= 1 && factor_poly(p, f).prime_power();
}

bool polyquot_wvnr_structural(int64_t p, const GFpPoly& f) {
  auto fac = factor_poly(p, f);
  return fac.prime_power() || fac.squarefree();
}

std::vector<GFpPoly> monic_polys_of_degree(int64_t p, int degree) {
  std::vector<GFpPoly> out;
  size_t count = 1;
  for (int i = 0; i < degree; ++i) count *= static_cast<size_t>(p);
  out.reserve(count);
  for (size_t n = 0; n < count; ++n) {
    std::vector<int64_t> c(static_cast<size_t>(degree) + 1, 0);
    size_t rest = n;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<size_t>(i)] = static_cast<int64_t>(rest % p);
      rest /= static_cast<size_t>(p);
    }
    c.back() = 1;
    out.push_back(GFpPoly::make(p, std::move(c)));
  }
  return out;
}

}  // namespace ringlab
