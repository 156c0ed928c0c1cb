#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ringlab/common.hpp"
#include "ringlab/ring.hpp"

namespace ringlab::kernels {

// Runs body(i) for i in [0, n). The parallel path is skipped inside an
// enclosing parallel region so corpus sweeps do not oversubscribe.
template <class F>
void parallel_for(size_t n, Exec exec, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel && !omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) body(static_cast<size_t>(i));
    return;
  }
#endif
  (void)exec;
  for (size_t i = 0; i < n; ++i) body(i);
}

// Element scans, one output byte per dense index. Each kernel has a plain
// serial implementation (the reference) and an OpenMP one; outputs are
// identical by construction since every index is computed independently.

std::vector<uint8_t> idempotent_mask_serial(const FiniteRing& r);
std::vector<uint8_t> idempotent_mask_parallel(const FiniteRing& r);

std::vector<uint8_t> nilpotent_mask_serial(const FiniteRing& r);
std::vector<uint8_t> nilpotent_mask_parallel(const FiniteRing& r);

// Generic unit scan (a is a unit iff some b has a*b = 1); used when the
// construction provides no structural rule, and as the cross-check of the
// structural rules in tests.
std::vector<uint8_t> unit_mask_serial(const FiniteRing& r);
std::vector<uint8_t> unit_mask_parallel(const FiniteRing& r);

// regular[a] = 1 iff a = a^2*x for some x.
std::vector<uint8_t> regular_mask_serial(const FiniteRing& r);
std::vector<uint8_t> regular_mask_parallel(const FiniteRing& r);

// Single-element form of the regular scan, for sparse lazy use.
bool element_regular(const FiniteRing& r, Idx a);

inline std::vector<uint8_t> idempotent_mask(const FiniteRing& r, Exec e) {
  return e == Exec::serial ? idempotent_mask_serial(r) : idempotent_mask_parallel(r);
}
inline std::vector<uint8_t> nilpotent_mask(const FiniteRing& r, Exec e) {
  return e == Exec::serial ? nilpotent_mask_serial(r) : nilpotent_mask_parallel(r);
}
inline std::vector<uint8_t> unit_mask(const FiniteRing& r, Exec e) {
  return e == Exec::serial ? unit_mask_serial(r) : unit_mask_parallel(r);
}
inline std::vector<uint8_t> regular_mask(const FiniteRing& r, Exec e) {
  return e == Exec::serial ? regular_mask_serial(r) : regular_mask_parallel(r);
}

}  // namespace ringlab::kernels
