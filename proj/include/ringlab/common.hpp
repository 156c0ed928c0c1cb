#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

// Dense element index. Every ring element is addressed by an index in
// [0, size); all set machinery (ideals, caches) runs on these.
using Idx = uint32_t;

// Construction refuses carriers above this unless the caller raises the cap.
inline constexpr size_t kDefaultRingCap = 4096;

// Brute-force ideal-enumeration oracles refuse rings above this; they are
// super-quadratic in the carrier size.
inline constexpr size_t kDefaultOracleCap = 256;

// Below this size, add/mul/neg are materialized as flat lookup tables.
inline constexpr size_t kTableThreshold = 1024;

// Execution policy for scan kernels and corpus sweeps.
enum class Exec {
  serial,
  parallel,  // OpenMP when compiled in, serial fallback otherwise
};

class RingError : public std::runtime_error {
 public:
  explicit RingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Carrier or module size exceeds the construction cap.
class CapError : public RingError {
 public:
  CapError(const std::string& what, size_t computed, size_t cap)
      : RingError(what + ": computed size " + std::to_string(computed) +
                  " exceeds cap " + std::to_string(cap)),
        computed_size(computed),
        cap(cap) {}
  size_t computed_size;
  size_t cap;
};

// An exhaustive oracle was asked to run on a ring above its cap.
class OracleCapError : public RingError {
 public:
  OracleCapError(size_t size, size_t cap)
      : RingError("oracle cap exceeded: ring size " + std::to_string(size) +
                  " > " + std::to_string(cap)),
        size(size),
        cap(cap) {}
  size_t size;
  size_t cap;
};

}  // namespace ringlab
