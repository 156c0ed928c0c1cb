#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/common.hpp"

namespace ringlab {

// Fixed-universe bitset over element indices [0, n).
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  size_t universe() const { return n_; }

  bool test(Idx i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(Idx i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(Idx i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const DenseSet& o) const { return words_ == o.words_; }
  bool operator!=(const DenseSet& o) const { return !(*this == o); }

  DenseSet& operator|=(const DenseSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DenseSet& operator&=(const DenseSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend DenseSet operator&(DenseSet a, const DenseSet& b) { return a &= b; }
  friend DenseSet operator|(DenseSet a, const DenseSet& b) { return a |= b; }

  bool contains_all(const DenseSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  std::vector<Idx> to_vector() const {
    std::vector<Idx> out;
    out.reserve(count());
    for (Idx i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  // Ordering for deterministic reports: the set containing the smallest
  // differing index sorts first.
  bool lex_less(const DenseSet& o) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t diff = words_[w] ^ o.words_[w];
      if (diff == 0) continue;
      uint64_t low = diff & (~diff + 1);
      return (words_[w] & low) != 0;
    }
    return false;
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace ringlab
