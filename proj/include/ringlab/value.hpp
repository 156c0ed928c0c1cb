#pragma once

#include <cstdint>
#include <vector>

namespace ringlab {

// Construction-specific canonical form of a ring or module element:
// a residue for Z/n, component values for products and modules, a
// coefficient vector for polynomial quotients, a (base, module) pair for
// trivial extensions. Equality is structural.
struct Value {
  int64_t residue = 0;          // meaningful only for leaves
  std::vector<Value> children;  // nonempty for composite elements

  bool leaf() const { return children.empty(); }

  static Value of(int64_t r) {
    Value v;
    v.residue = r;
    return v;
  }
  static Value tuple(std::vector<Value> cs) {
    Value v;
    v.children = std::move(cs);
    return v;
  }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.leaf() != b.leaf()) return false;
    if (a.leaf()) return a.residue == b.residue;
    return a.children == b.children;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
};

}  // namespace ringlab
