#include "ringlab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace ringlab {

namespace {

// ---------------------------------------------------------------- Z/n ----

class ZmodOps final : public detail::RingOps {
 public:
  explicit ZmodOps(int64_t n) : n_(n) {}

  size_t size() const override { return static_cast<size_t>(n_); }
  Idx zero() const override { return 0; }
  Idx one() const override { return 1 % n_; }
  Idx add(Idx a, Idx b) const override {
    uint64_t s = uint64_t(a) + b;
    if (s >= uint64_t(n_)) s -= n_;
    return static_cast<Idx>(s);
  }
  Idx neg(Idx a) const override { return a == 0 ? 0 : static_cast<Idx>(n_ - a); }
  Idx mul(Idx a, Idx b) const override {
    return static_cast<Idx>((uint64_t(a) * b) % uint64_t(n_));
  }
  Value decode(Idx a) const override { return Value::of(a); }
  std::optional<Idx> encode(const Value& v) const override {
    if (!v.leaf() || v.residue < 0 || v.residue >= n_) return std::nullopt;
    return static_cast<Idx>(v.residue);
  }
  std::string format(Idx a) const override { return std::to_string(a); }

  std::optional<std::vector<uint8_t>> structural_unit_mask() const override {
    std::vector<uint8_t> mask(size());
    for (Idx a = 0; a < size(); ++a) mask[a] = std::gcd(int64_t(a), n_) == 1;
    return mask;
  }

 private:
  int64_t n_;
};

// ------------------------------------------------------------ products ----

class ProductOps final : public detail::RingOps {
 public:
  ProductOps(std::vector<FiniteRing> factors, size_t total)
      : factors_(std::move(factors)), total_(total) {
    strides_.resize(factors_.size());
    size_t s = 1;
    for (size_t i = 0; i < factors_.size(); ++i) {
      strides_[i] = s;
      s *= factors_[i].size();
    }
  }

  size_t size() const override { return total_; }
  Idx zero() const override {
    Idx out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += static_cast<Idx>(factors_[i].zero() * strides_[i]);
    return out;
  }
  Idx one() const override {
    Idx out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += static_cast<Idx>(factors_[i].one() * strides_[i]);
    return out;
  }

  Idx comp(Idx a, size_t i) const {
    return static_cast<Idx>((a / strides_[i]) % factors_[i].size());
  }

  Idx add(Idx a, Idx b) const override {
    Idx out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += static_cast<Idx>(factors_[i].add(comp(a, i), comp(b, i)) * strides_[i]);
    return out;
  }
  Idx neg(Idx a) const override {
    Idx out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += static_cast<Idx>(factors_[i].neg(comp(a, i)) * strides_[i]);
    return out;
  }
  Idx mul(Idx a, Idx b) const override {
    Idx out = 0;
    for (size_t i = 0; i < factors_.size(); ++i)
      out += static_cast<Idx>(factors_[i].mul(comp(a, i), comp(b, i)) * strides_[i]);
    return out;
  }

  Value decode(Idx a) const override {
    std::vector<Value> cs;
    cs.reserve(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i)
      cs.push_back(factors_[i].decode(comp(a, i)));
    return Value::tuple(std::move(cs));
  }
  std::optional<Idx> encode(const Value& v) const override {
    if (v.leaf() || v.children.size() != factors_.size()) return std::nullopt;
    Idx out = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
      auto c = factors_[i].encode(v.children[i]);
      if (!c) return std::nullopt;
      out += static_cast<Idx>(*c * strides_[i]);
    }
    return out;
  }
  std::string format(Idx a) const override {
    std::string out = "(";
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ",";
      out += factors_[i].format(comp(a, i));
    }
    return out + ")";
  }

  std::optional<std::vector<uint8_t>> structural_unit_mask() const override {
    // unit iff every component is a unit
    std::vector<uint8_t> mask(total_, 1);
    for (Idx a = 0; a < total_; ++a)
      for (size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].structure().units.test(comp(a, i))) {
          mask[a] = 0;
          break;
        }
    return mask;
  }

 private:
  std::vector<FiniteRing> factors_;
  std::vector<size_t> strides_;
  size_t total_;
};

// ------------------------------------------------- polynomial quotient ----

class PolyQuotientOps final : public detail::RingOps {
 public:
  PolyQuotientOps(FiniteRing base, std::vector<Idx> monic, size_t total)
      : base_(std::move(base)), f_(std::move(monic)), total_(total) {
    deg_ = f_.size() - 1;
  }

  size_t size() const override { return total_; }
  size_t degree() const { return deg_; }

  Idx zero() const override { return pack_constant(base_.zero()); }
  Idx one() const override { return pack_constant(base_.one()); }

  std::vector<Idx> coeffs(Idx a) const {
    std::vector<Idx> out(deg_);
    size_t rest = a;
    for (size_t i = 0; i < deg_; ++i) {
      out[i] = static_cast<Idx>(rest % base_.size());
      rest /= base_.size();
    }
    return out;
  }
  Idx pack(const std::vector<Idx>& cs) const {
    size_t out = 0;
    for (size_t i = deg_; i-- > 0;) out = out * base_.size() + cs[i];
    return static_cast<Idx>(out);
  }

  Idx add(Idx a, Idx b) const override {
    auto ca = coeffs(a), cb = coeffs(b);
    for (size_t i = 0; i < deg_; ++i) ca[i] = base_.add(ca[i], cb[i]);
    return pack(ca);
  }
  Idx neg(Idx a) const override {
    auto ca = coeffs(a);
    for (size_t i = 0; i < deg_; ++i) ca[i] = base_.neg(ca[i]);
    return pack(ca);
  }
  Idx mul(Idx a, Idx b) const override {
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<Idx> conv(2 * deg_ - 1, base_.zero());
    for (size_t i = 0; i < deg_; ++i) {
      if (ca[i] == base_.zero()) continue;
      for (size_t j = 0; j < deg_; ++j)
        conv[i + j] = base_.add(conv[i + j], base_.mul(ca[i], cb[j]));
    }
    // reduce mod f: x^deg = -(f[0] + ... + f[deg-1] x^(deg-1))
    for (size_t i = conv.size(); i-- > deg_;) {
      Idx c = conv[i];
      if (c == base_.zero()) continue;
      conv[i] = base_.zero();
      for (size_t j = 0; j < deg_; ++j)
        conv[i - deg_ + j] = base_.sub(conv[i - deg_ + j], base_.mul(c, f_[j]));
    }
    conv.resize(deg_);
    return pack(conv);
  }

  Value decode(Idx a) const override {
    auto cs = coeffs(a);
    std::vector<Value> vals;
    vals.reserve(deg_);
    for (Idx c : cs) vals.push_back(base_.decode(c));
    return Value::tuple(std::move(vals));
  }
  std::optional<Idx> encode(const Value& v) const override {
    if (v.leaf() || v.children.size() != deg_) return std::nullopt;
    std::vector<Idx> cs(deg_);
    for (size_t i = 0; i < deg_; ++i) {
      auto c = base_.encode(v.children[i]);
      if (!c) return std::nullopt;
      cs[i] = *c;
    }
    return pack(cs);
  }

  std::string format(Idx a) const override {
    auto cs = coeffs(a);
    std::string out;
    for (size_t i = deg_; i-- > 0;) {
      if (cs[i] == base_.zero()) continue;
      if (!out.empty()) out += "+";
      std::string ct = base_.format(cs[i]);
      if (i == 0) {
        out += ct;
      } else {
        std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
        out += cs[i] == base_.one() ? xs : ct + xs;
      }
    }
    return out.empty() ? base_.format(base_.zero()) : out;
  }

  std::optional<std::vector<uint8_t>> structural_unit_mask() const override {
    bool pure_power = true;
    for (size_t j = 0; j < deg_; ++j)
      if (f_[j] != base_.zero()) {
        pure_power = false;
        break;
      }
    if (pure_power) {
      // x is nilpotent, so u is a unit iff its constant term is
      std::vector<uint8_t> mask(total_);
      const auto& base_units = base_.structure().units;
      for (Idx a = 0; a < total_; ++a)
        mask[a] = base_units.test(static_cast<Idx>(a % base_.size()));
      return mask;
    }
    if (base_.structure().units.count() == base_.size() - 1) return field_gcd_mask();
    return std::nullopt;
  }

 private:
  Idx pack_constant(Idx c) const {
    std::vector<Idx> cs(deg_, base_.zero());
    cs[0] = c;
    return pack(cs);
  }

  // Base is a field: u is a unit iff gcd(u, f) = 1.
  std::vector<uint8_t> field_gcd_mask() const {
    const size_t bs = base_.size();
    std::vector<Idx> inv(bs, 0);
    for (Idx a = 0; a < bs; ++a)
      for (Idx b = 0; b < bs; ++b)
        if (base_.mul(a, b) == base_.one()) {
          inv[a] = b;
          break;
        }

    auto trim = [&](std::vector<Idx>& p) {
      while (!p.empty() && p.back() == base_.zero()) p.pop_back();
    };
    // remainder of a by b (b nonzero), in place over trimmed vectors
    auto rem = [&](std::vector<Idx> a, const std::vector<Idx>& b) {
      Idx lead_inv = inv[b.back()];
      while (a.size() >= b.size()) {
        Idx q = base_.mul(a.back(), lead_inv);
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
          a[shift + j] = base_.sub(a[shift + j], base_.mul(q, b[j]));
        trim(a);
        if (a.empty()) break;
      }
      return a;
    };

    std::vector<Idx> fv(f_.begin(), f_.end());
    std::vector<uint8_t> mask(total_);
    for (Idx u = 0; u < total_; ++u) {
      std::vector<Idx> a = fv;
      std::vector<Idx> b = coeffs(u);
      trim(b);
      while (!b.empty()) {
        auto r = rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
      }
      mask[u] = a.size() == 1;  // nonzero constant gcd
    }
    return mask;
  }

  FiniteRing base_;
  std::vector<Idx> f_;  // monic, length degree+1
  size_t deg_;
  size_t total_;
};

// ----------------------------------------------------- trivial extension ----

class TrivialExtOps final : public detail::RingOps {
 public:
  TrivialExtOps(FiniteRing a, FiniteModule e, size_t total)
      : a_(std::move(a)), e_(std::move(e)), total_(total) {}

  size_t size() const override { return total_; }
  Idx zero() const override { return pack(a_.zero(), e_.zero()); }
  Idx one() const override { return pack(a_.one(), e_.zero()); }

  Idx ring_part(Idx v) const { return static_cast<Idx>(v % a_.size()); }
  Idx mod_part(Idx v) const { return static_cast<Idx>(v / a_.size()); }
  Idx pack(Idx a, Idx x) const { return static_cast<Idx>(a + a_.size() * x); }

  Idx add(Idx u, Idx v) const override {
    return pack(a_.add(ring_part(u), ring_part(v)), e_.add(mod_part(u), mod_part(v)));
  }
  Idx neg(Idx u) const override {
    return pack(a_.neg(ring_part(u)), e_.neg(mod_part(u)));
  }
  Idx mul(Idx u, Idx v) const override {
    Idx a = ring_part(u), x = mod_part(u);
    Idx b = ring_part(v), y = mod_part(v);
    return pack(a_.mul(a, b), e_.add(e_.scalar(a, y), e_.scalar(b, x)));
  }

  Value decode(Idx u) const override {
    return Value::tuple({a_.decode(ring_part(u)), e_.decode(mod_part(u))});
  }
  std::optional<Idx> encode(const Value& v) const override {
    if (v.leaf() || v.children.size() != 2) return std::nullopt;
    auto a = a_.encode(v.children[0]);
    if (!a) return std::nullopt;
    // module element: tuple of component representative values
    const Value& mv = v.children[1];
    if (mv.leaf() || mv.children.size() != e_.component_count()) return std::nullopt;
    for (Idx x = 0; x < e_.size(); ++x)
      if (e_.decode(x) == mv) return pack(*a, x);
    return std::nullopt;
  }
  std::string format(Idx u) const override {
    return "(" + a_.format(ring_part(u)) + "," + e_.format(mod_part(u)) + ")";
  }

  std::optional<std::vector<uint8_t>> structural_unit_mask() const override {
    // (a,x) is a unit iff a is: the inverse is (a^-1, -a^-2 x)
    std::vector<uint8_t> mask(total_);
    const auto& base_units = a_.structure().units;
    for (Idx u = 0; u < total_; ++u) mask[u] = base_units.test(ring_part(u));
    return mask;
  }

 private:
  FiniteRing a_;
  FiniteModule e_;
  size_t total_;
};

size_t checked_size_product(const std::vector<size_t>& sizes, size_t cap,
                            const char* what) {
  size_t total = 1;
  for (size_t s : sizes) {
    if (s == 0 || total > cap / s) throw CapError(what, cap + 1, cap);
    total *= s;
  }
  return total;
}

}  // namespace

// -------------------------------------------------------- descriptors ----

DescPtr RingDescriptor::zmod(int64_t n) {
  auto d = std::make_shared<RingDescriptor>();
  d->kind = Kind::zmod;
  d->modulus = n;
  return d;
}

DescPtr RingDescriptor::product(std::vector<DescPtr> factors) {
  auto d = std::make_shared<RingDescriptor>();
  d->kind = Kind::product;
  d->factors = std::move(factors);
  return d;
}

DescPtr RingDescriptor::poly_quotient(DescPtr base, std::vector<int64_t> poly) {
  auto d = std::make_shared<RingDescriptor>();
  d->kind = Kind::poly_quotient;
  d->base = std::move(base);
  d->poly = std::move(poly);
  return d;
}

DescPtr RingDescriptor::trivial_ext(DescPtr base, ModuleSpec module) {
  auto d = std::make_shared<RingDescriptor>();
  d->kind = Kind::trivial_ext;
  d->base = std::move(base);
  d->module = std::move(module);
  return d;
}

namespace {

std::string poly_term_text(int64_t coeff, size_t exp) {
  std::string xs;
  if (exp == 1)
    xs = "x";
  else if (exp > 1)
    xs = "x^" + std::to_string(exp);
  if (exp == 0) return std::to_string(coeff);
  if (coeff == 1) return xs;
  return std::to_string(coeff) + "*" + xs;
}

std::string int_poly_to_text(const std::vector<int64_t>& coeffs) {
  std::string out;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    int64_t c = coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out += "0-" + poly_term_text(-c, i);
      else out += poly_term_text(c, i);
      first = false;
    } else {
      out += c < 0 ? "-" + poly_term_text(-c, i) : "+" + poly_term_text(c, i);
    }
  }
  return first ? "0" : out;
}

}  // namespace

std::string module_spec_to_text(const ModuleSpec& spec) {
  std::string out;
  size_t i = 0;
  while (i < spec.components.size()) {
    const auto& comp = spec.components[i];
    if (!out.empty()) out += " (+) ";
    if (comp.annihilators.empty()) {
      // compress runs of free components into self^m
      size_t run = 1;
      while (i + run < spec.components.size() &&
             spec.components[i + run].annihilators.empty())
        ++run;
      out += run == 1 ? "self" : "self^" + std::to_string(run);
      i += run;
    } else {
      out += "self/(";
      for (size_t j = 0; j < comp.annihilators.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(comp.annihilators[j]);
      }
      out += ")";
      ++i;
    }
  }
  return out;
}

std::string RingDescriptor::to_text() const {
  switch (kind) {
    case Kind::zmod:
      return "Z/" + std::to_string(modulus);
    case Kind::product: {
      std::string out;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " * ";
        std::string t = factors[i]->to_text();
        out += factors[i]->kind == Kind::product ? "(" + t + ")" : t;
      }
      return out;
    }
    case Kind::poly_quotient: {
      std::string bt = base->to_text();
      if (base->kind == Kind::product) bt = "(" + bt + ")";
      return bt + "[x]/(" + int_poly_to_text(poly) + ")";
    }
    case Kind::trivial_ext:
      return "triv(" + base->to_text() + ", " + module_spec_to_text(module) + ")";
  }
  return "";
}

// ------------------------------------------------------------- makers ----

FiniteRing make_zmod(int64_t n, size_t cap) {
  if (n < 2) throw RingError("Z/n requires n >= 2, got " + std::to_string(n));
  if (static_cast<uint64_t>(n) > cap) throw CapError("Z/n size overflow", n, cap);
  return FiniteRing::from_ops(std::make_unique<ZmodOps>(n), RingDescriptor::zmod(n), cap);
}

FiniteRing make_product(std::vector<FiniteRing> factors, size_t cap) {
  if (factors.size() < 2) throw RingError("product requires arity >= 2");
  std::vector<size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.size());
  size_t total = checked_size_product(sizes, cap, "product size overflow");

  std::vector<DescPtr> descs;
  bool have_descs = true;
  for (const auto& f : factors) {
    if (!f.descriptor()) have_descs = false;
    else descs.push_back(f.descriptor());
  }
  DescPtr desc = have_descs ? RingDescriptor::product(std::move(descs)) : nullptr;
  return FiniteRing::from_ops(std::make_unique<ProductOps>(std::move(factors), total),
                              std::move(desc), cap);
}

namespace {

// Shared construction path. `ipoly` carries canonical integer coefficients
// when the caller has them (trimmed in tandem with f); without them the
// descriptor is recovered by decoding leaf coefficient values and stays
// unset over composite bases.
FiniteRing poly_quotient_impl(const FiniteRing& base, std::vector<Idx> f,
                              std::optional<std::vector<int64_t>> ipoly, size_t cap) {
  while (!f.empty() && f.back() == base.zero()) {
    f.pop_back();
    if (ipoly) ipoly->pop_back();
  }
  if (f.size() < 2)
    throw RingError("polynomial modulus must have degree >= 1");
  if (f.back() != base.one())
    throw RingError("polynomial modulus is not monic (leading coefficient " +
                    base.format(f.back()) + ")");

  size_t deg = f.size() - 1;
  size_t total = 1;
  for (size_t i = 0; i < deg; ++i) {
    if (total > cap / base.size())
      throw CapError("polynomial quotient size overflow", cap + 1, cap);
    total *= base.size();
  }

  DescPtr desc;
  if (base.descriptor()) {
    if (!ipoly) {
      std::vector<int64_t> readback;
      for (Idx c : f) {
        Value v = base.decode(c);
        if (!v.leaf()) break;
        readback.push_back(v.residue);
      }
      if (readback.size() == f.size()) ipoly = std::move(readback);
    }
    if (ipoly) desc = RingDescriptor::poly_quotient(base.descriptor(), *ipoly);
  }
  return FiniteRing::from_ops(
      std::make_unique<PolyQuotientOps>(base, std::move(f), total), std::move(desc), cap);
}

}  // namespace

FiniteRing make_poly_quotient(const FiniteRing& base, const std::vector<Idx>& monic,
                              size_t cap) {
  return poly_quotient_impl(base, monic, std::nullopt, cap);
}

FiniteRing make_poly_quotient_int(const FiniteRing& base, const std::vector<int64_t>& coeffs,
                                  size_t cap) {
  int64_t ch = base.characteristic();
  std::vector<Idx> f;
  std::vector<int64_t> ipoly;
  f.reserve(coeffs.size());
  ipoly.reserve(coeffs.size());
  for (int64_t c : coeffs) {
    int64_t r = ((c % ch) + ch) % ch;  // n*1 depends only on n mod char
    ipoly.push_back(r);
    f.push_back(base.from_int(r));
  }
  return poly_quotient_impl(base, std::move(f), std::move(ipoly), cap);
}

FiniteRing make_trivial_extension(const FiniteRing& a, const FiniteModule& e, size_t cap) {
  if (!e.base().same_carrier(a))
    throw RingError("trivial extension module was realized over a different base");
  size_t total = checked_size_product({a.size(), e.size()}, cap,
                                      "trivial extension size overflow");
  DescPtr desc;
  if (a.descriptor()) desc = RingDescriptor::trivial_ext(a.descriptor(), e.spec());
  return FiniteRing::from_ops(std::make_unique<TrivialExtOps>(a, e, total),
                              std::move(desc), cap);
}

FiniteRing realize(const RingDescriptor& desc, size_t cap) {
  switch (desc.kind) {
    case RingDescriptor::Kind::zmod:
      return make_zmod(desc.modulus, cap);
    case RingDescriptor::Kind::product: {
      std::vector<FiniteRing> factors;
      factors.reserve(desc.factors.size());
      for (const auto& f : desc.factors) factors.push_back(realize(*f, cap));
      return make_product(std::move(factors), cap);
    }
    case RingDescriptor::Kind::poly_quotient:
      return make_poly_quotient_int(realize(*desc.base, cap), desc.poly, cap);
    case RingDescriptor::Kind::trivial_ext: {
      FiniteRing base = realize(*desc.base, cap);
      FiniteModule mod = make_module(base, desc.module, cap);
      return make_trivial_extension(base, mod, cap);
    }
  }
  throw RingError("unknown descriptor kind");
}

FiniteRing realize(const DescPtr& desc, size_t cap) { return realize(*desc, cap); }

}  // namespace ringlab
