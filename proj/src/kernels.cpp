#include "ringlab/kernels.hpp"

#include <cmath>

namespace ringlab::kernels {

namespace {

inline bool idempotent_at(const FiniteRing& r, Idx a) { return r.mul(a, a) == a; }

inline bool nilpotent_at(const FiniteRing& r, Idx a) {
  // a^(2^k) = 0 for some k iff a is nilpotent; log2(size)+1 squarings
  // suffice in a finite ring.
  Idx b = a;
  size_t steps = 1;
  for (size_t s = r.size(); s > 1; s >>= 1) ++steps;
  for (size_t i = 0; i < steps; ++i) {
    if (b == r.zero()) return true;
    b = r.mul(b, b);
  }
  return b == r.zero();
}

inline bool unit_at(const FiniteRing& r, Idx a) {
  const Idx one = r.one();
  for (Idx b = 0; b < r.size(); ++b)
    if (r.mul(a, b) == one) return true;
  return false;
}

inline bool regular_at(const FiniteRing& r, Idx a) {
  const Idx sq = r.mul(a, a);
  for (Idx x = 0; x < r.size(); ++x)
    if (r.mul(sq, x) == a) return true;
  return false;
}

}  // namespace

std::vector<uint8_t> idempotent_mask_serial(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  for (Idx a = 0; a < r.size(); ++a) out[a] = idempotent_at(r, a);
  return out;
}

std::vector<uint8_t> idempotent_mask_parallel(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  parallel_for(r.size(), Exec::parallel,
               [&](size_t a) { out[a] = idempotent_at(r, static_cast<Idx>(a)); });
  return out;
}

std::vector<uint8_t> nilpotent_mask_serial(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  for (Idx a = 0; a < r.size(); ++a) out[a] = nilpotent_at(r, a);
  return out;
}

std::vector<uint8_t> nilpotent_mask_parallel(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  parallel_for(r.size(), Exec::parallel,
               [&](size_t a) { out[a] = nilpotent_at(r, static_cast<Idx>(a)); });
  return out;
}

std::vector<uint8_t> unit_mask_serial(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  for (Idx a = 0; a < r.size(); ++a) out[a] = unit_at(r, a);
  return out;
}

std::vector<uint8_t> unit_mask_parallel(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  parallel_for(r.size(), Exec::parallel,
               [&](size_t a) { out[a] = unit_at(r, static_cast<Idx>(a)); });
  return out;
}

std::vector<uint8_t> regular_mask_serial(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  for (Idx a = 0; a < r.size(); ++a) out[a] = regular_at(r, a);
  return out;
}

std::vector<uint8_t> regular_mask_parallel(const FiniteRing& r) {
  std::vector<uint8_t> out(r.size());
  parallel_for(r.size(), Exec::parallel,
               [&](size_t a) { out[a] = regular_at(r, static_cast<Idx>(a)); });
  return out;
}

bool element_regular(const FiniteRing& r, Idx a) { return regular_at(r, a); }

}  // namespace ringlab::kernels
