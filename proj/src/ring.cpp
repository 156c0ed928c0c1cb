#include "ringlab/ring.hpp"

#include <random>

#include "ringlab/kernels.hpp"

namespace ringlab {

Idx FiniteRing::pow(Idx a, uint64_t k) const {
  Idx acc = one();
  Idx base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

Idx FiniteRing::from_int(int64_t n) const {
  int64_t ch = characteristic();
  int64_t m = n % ch;
  if (m < 0) m += ch;
  Idx acc = zero();
  for (int64_t i = 0; i < m; ++i) acc = add(acc, one());
  return acc;
}

std::string FiniteRing::text() const {
  if (data_->desc) return data_->desc->to_text();
  return "ring<" + std::to_string(size()) + ">";
}

namespace {

int64_t additive_order_of_one(const detail::RingOps& ops) {
  Idx acc = ops.one();
  int64_t order = 1;
  while (acc != ops.zero()) {
    acc = ops.add(acc, ops.one());
    ++order;
  }
  return order;
}

StructureCache compute_structure(const FiniteRing& r, const detail::RingOps& ops) {
  const size_t n = r.size();
  StructureCache cache;

  auto idem = kernels::idempotent_mask(r, Exec::parallel);
  cache.idempotent_set = DenseSet(n);
  for (Idx i = 0; i < n; ++i)
    if (idem[i]) {
      cache.idempotents.push_back(i);
      cache.idempotent_set.set(i);
    }

  auto nilp = kernels::nilpotent_mask(r, Exec::parallel);
  cache.nilpotents = DenseSet(n);
  for (Idx i = 0; i < n; ++i)
    if (nilp[i]) cache.nilpotents.set(i);
  cache.reduced = cache.nilpotents.count() == 1;

  auto structural = ops.structural_unit_mask();
  auto unit = structural ? std::move(*structural) : kernels::unit_mask(r, Exec::parallel);
  cache.units = DenseSet(n);
  for (Idx i = 0; i < n; ++i)
    if (unit[i]) cache.units.set(i);

  return cache;
}

}  // namespace

FiniteRing FiniteRing::from_ops(std::unique_ptr<const detail::RingOps> ops,
                                DescPtr desc, size_t cap) {
  const size_t n = ops->size();
  if (n < 2) throw RingError("ring carrier must have at least 2 elements");
  if (n > cap) throw CapError("ring size overflow", n, cap);

  auto data = std::make_shared<detail::RingData>();
  data->size = n;
  data->zero = ops->zero();
  data->one = ops->one();
  data->characteristic = additive_order_of_one(*ops);
  data->desc = std::move(desc);

  if (n <= kTableThreshold) {
    data->add_tab.resize(n * n);
    data->mul_tab.resize(n * n);
    data->neg_tab.resize(n);
    for (Idx a = 0; a < n; ++a) {
      data->neg_tab[a] = static_cast<uint16_t>(ops->neg(a));
      for (Idx b = 0; b < n; ++b) {
        data->add_tab[a * n + b] = static_cast<uint16_t>(ops->add(a, b));
        data->mul_tab[a * n + b] = static_cast<uint16_t>(ops->mul(a, b));
      }
    }
  }

  const detail::RingOps& ops_ref = *ops;
  data->ops = std::move(ops);
  FiniteRing ring(data);
  data->cache = compute_structure(ring, ops_ref);
  return ring;
}

std::vector<Idx> idempotents(const FiniteRing& r) { return r.structure().idempotents; }

bool has_exactly_two_idempotents(const FiniteRing& r) {
  return r.structure().idempotents.size() == 2;
}

bool is_unit(const FiniteRing& r, Idx a) { return r.structure().units.test(a); }

DenseSet units(const FiniteRing& r) { return r.structure().units; }

bool is_nilpotent(const FiniteRing& r, Idx a) { return r.structure().nilpotents.test(a); }

bool is_reduced(const FiniteRing& r) { return r.structure().reduced; }

namespace {

struct TripleChecker {
  const FiniteRing& r;
  std::optional<AxiomViolation> violation;

  bool fail(const char* axiom, Idx a, Idx b, Idx c) {
    violation = AxiomViolation{axiom, a, b, c};
    return false;
  }

  bool check(Idx a, Idx b, Idx c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
      return fail("additive associativity", a, b, c);
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
      return fail("multiplicative associativity", a, b, c);
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
      return fail("distributivity", a, b, c);
    if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", a, b, c);
    if (r.mul(a, b) != r.mul(b, a)) return fail("multiplicative commutativity", a, b, c);
    if (r.add(a, r.zero()) != a) return fail("additive identity", a, b, c);
    if (r.add(a, r.neg(a)) != r.zero()) return fail("additive inverse", a, b, c);
    if (r.mul(a, r.one()) != a) return fail("multiplicative identity", a, b, c);
    return true;
  }
};

}  // namespace

AxiomReport check_ring_axioms(const FiniteRing& r, uint64_t budget) {
  AxiomReport report;
  const uint64_t n = r.size();
  TripleChecker checker{r, {}};

  if (r.one() == r.zero()) {
    report.violation = AxiomViolation{"one equals zero", r.one(), 0, 0};
    return report;
  }
  for (Idx a = 0; a < n; ++a) {
    if (auto enc = r.encode(r.decode(a)); !enc || *enc != a) {
      report.violation = AxiomViolation{"encode/decode identity", a, 0, 0};
      return report;
    }
  }

  if (n * n * n <= budget) {
    report.exhaustive = true;
    for (Idx a = 0; a < n; ++a)
      for (Idx b = 0; b < n; ++b)
        for (Idx c = 0; c < n; ++c) {
          ++report.triples_checked;
          if (!checker.check(a, b, c)) {
            report.violation = checker.violation;
            return report;
          }
        }
  } else {
    std::mt19937_64 rng(0x5eed * n + 17);
    std::uniform_int_distribution<Idx> dist(0, static_cast<Idx>(n - 1));
    for (uint64_t i = 0; i < budget; ++i) {
      ++report.triples_checked;
      if (!checker.check(dist(rng), dist(rng), dist(rng))) {
        report.violation = checker.violation;
        return report;
      }
    }
  }

  report.pass = true;
  return report;
}

}  // namespace ringlab
