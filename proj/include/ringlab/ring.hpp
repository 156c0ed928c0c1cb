#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/common.hpp"
#include "ringlab/descriptor.hpp"
#include "ringlab/value.hpp"

namespace ringlab {

// Derived structure, computed eagerly at construction. Idempotents always
// contain zero and one; reduced <=> nilpotents = {zero}.
struct StructureCache {
  std::vector<Idx> idempotents;  // ascending dense-index order
  DenseSet idempotent_set;
  DenseSet units;
  DenseSet nilpotents;
  bool reduced = false;
};

namespace detail {

// Construction-specific arithmetic on dense indices. Implementations are
// immutable and total on [0, size).
class RingOps {
 public:
  virtual ~RingOps() = default;
  virtual size_t size() const = 0;
  virtual Idx zero() const = 0;
  virtual Idx one() const = 0;
  virtual Idx add(Idx a, Idx b) const = 0;
  virtual Idx neg(Idx a) const = 0;
  virtual Idx mul(Idx a, Idx b) const = 0;
  virtual Value decode(Idx a) const = 0;
  virtual std::optional<Idx> encode(const Value& v) const = 0;
  virtual std::string format(Idx a) const = 0;
  // Unit set computed from the construction's structure (gcd for Z/n,
  // componentwise for products, ...). nullopt selects the generic scan.
  virtual std::optional<std::vector<uint8_t>> structural_unit_mask() const {
    return std::nullopt;
  }
};

struct RingData {
  std::unique_ptr<const RingOps> ops;
  size_t size = 0;
  Idx zero = 0;
  Idx one = 0;
  int64_t characteristic = 0;  // additive order of one
  // Flat operation tables, materialized when size <= kTableThreshold.
  std::vector<uint16_t> add_tab, mul_tab, neg_tab;
  StructureCache cache;
  DescPtr desc;
};

}  // namespace detail

// A realized finite commutative unital ring. Immutable after construction;
// copies share the underlying carrier. All operations are pure reads.
class FiniteRing {
 public:
  FiniteRing() = default;

  bool valid() const { return data_ != nullptr; }
  size_t size() const { return data_->size; }
  Idx zero() const { return data_->zero; }
  Idx one() const { return data_->one; }
  int64_t characteristic() const { return data_->characteristic; }

  Idx add(Idx a, Idx b) const {
    const auto& d = *data_;
    return d.add_tab.empty() ? d.ops->add(a, b) : d.add_tab[a * d.size + b];
  }
  Idx mul(Idx a, Idx b) const {
    const auto& d = *data_;
    return d.mul_tab.empty() ? d.ops->mul(a, b) : d.mul_tab[a * d.size + b];
  }
  Idx neg(Idx a) const {
    const auto& d = *data_;
    return d.neg_tab.empty() ? d.ops->neg(a) : d.neg_tab[a];
  }
  Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }
  Idx pow(Idx a, uint64_t k) const;
  // Canonical image of an integer, n -> n*1.
  Idx from_int(int64_t n) const;

  Value decode(Idx a) const { return data_->ops->decode(a); }
  std::optional<Idx> encode(const Value& v) const { return data_->ops->encode(v); }
  std::string format(Idx a) const { return data_->ops->format(a); }

  const StructureCache& structure() const { return data_->cache; }
  DescPtr descriptor() const { return data_->desc; }
  std::string text() const;  // descriptor DSL text, or "ring<size>"

  // True when both sides share the same realized carrier.
  bool same_carrier(const FiniteRing& o) const { return data_ == o.data_; }

  // Wraps an arithmetic implementation: materializes tables, verifies the
  // cap, and computes the structure cache.
  static FiniteRing from_ops(std::unique_ptr<const detail::RingOps> ops,
                             DescPtr desc, size_t cap = kDefaultRingCap);

 private:
  explicit FiniteRing(std::shared_ptr<detail::RingData> d) : data_(std::move(d)) {}
  std::shared_ptr<detail::RingData> data_;
};

// Structure queries. All read the eager cache.
std::vector<Idx> idempotents(const FiniteRing& r);
bool has_exactly_two_idempotents(const FiniteRing& r);
bool is_unit(const FiniteRing& r, Idx a);
DenseSet units(const FiniteRing& r);
bool is_nilpotent(const FiniteRing& r, Idx a);
bool is_reduced(const FiniteRing& r);

struct AxiomViolation {
  std::string axiom;
  Idx a = 0, b = 0, c = 0;
};

struct AxiomReport {
  bool pass = false;
  bool exhaustive = false;
  uint64_t triples_checked = 0;
  std::optional<AxiomViolation> violation;
};

// Verifies the commutative-unital-ring axioms plus the encode/decode
// bijection. Exhaustive when size^3 <= budget, otherwise a deterministic
// pseudo-random sample of `budget` triples. Violations are report content,
// not errors.
AxiomReport check_ring_axioms(const FiniteRing& r, uint64_t budget);

}  // namespace ringlab
