#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ringlab {

struct RingDescriptor;
using DescPtr = std::shared_ptr<const RingDescriptor>;

// One cyclic summand A/(g1,...,gk); an empty annihilator list is the free
// cyclic module A itself.
struct ModuleComponentSpec {
  std::vector<int64_t> annihilators;
};

// Finite direct sum of cyclic quotient modules over the base ring.
struct ModuleSpec {
  std::vector<ModuleComponentSpec> components;
};

// Syntactic recipe for a finite ring. Integer literals in polynomial
// coefficients and module annihilators go through the canonical map
// n -> n*1 of the base ring.
struct RingDescriptor {
  enum class Kind { zmod, product, poly_quotient, trivial_ext };

  Kind kind = Kind::zmod;
  int64_t modulus = 0;            // zmod
  std::vector<DescPtr> factors;   // product, arity >= 2
  DescPtr base;                   // poly_quotient / trivial_ext
  std::vector<int64_t> poly;      // poly_quotient: coefficients, ascending
  ModuleSpec module;              // trivial_ext

  static DescPtr zmod(int64_t n);
  static DescPtr product(std::vector<DescPtr> factors);
  static DescPtr poly_quotient(DescPtr base, std::vector<int64_t> poly);
  static DescPtr trivial_ext(DescPtr base, ModuleSpec module);

  // Canonical DSL text for this recipe; parseable by expr::parse.
  std::string to_text() const;
};

std::string module_spec_to_text(const ModuleSpec& spec);

}  // namespace ringlab
