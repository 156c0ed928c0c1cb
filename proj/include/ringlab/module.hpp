#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/descriptor.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/value.hpp"

namespace ringlab {

// A realized finite module over a realized base ring: a direct sum of
// cyclic quotient modules A/(g1,...,gk). Elements are dense indices,
// mixed-radix over the components (first component fastest). Each cyclic
// component element is the coset of the annihilator ideal, represented by
// the minimal dense base index in the coset.
class FiniteModule {
 public:
  FiniteModule() = default;

  bool valid() const { return data_ != nullptr; }
  size_t size() const { return data_->size; }
  Idx zero() const { return 0; }
  const FiniteRing& base() const { return data_->base; }
  const ModuleSpec& spec() const { return data_->spec; }
  size_t component_count() const { return data_->components.size(); }

  Idx add(Idx x, Idx y) const;
  Idx neg(Idx x) const;
  // Scalar action: a in the base ring, x in the module.
  Idx scalar(Idx a, Idx x) const;

  Value decode(Idx x) const;
  std::string format(Idx x) const;

  friend FiniteModule make_module(const FiniteRing& base, const ModuleSpec& spec,
                                  size_t cap);

 private:
  struct Component {
    std::vector<Idx> reps;         // coset representatives, ascending
    std::vector<Idx> elem_to_rank; // base index -> rank of its coset rep
  };
  struct Data {
    FiniteRing base;
    ModuleSpec spec;
    std::vector<Component> components;
    std::vector<size_t> strides;
    size_t size = 0;
  };
  std::shared_ptr<const Data> data_;
};

FiniteModule make_module(const FiniteRing& base, const ModuleSpec& spec,
                         size_t cap = kDefaultRingCap);

// Exhaustively verifies the abelian-group and scalar-action laws; returns a
// description of the first violation, or empty on pass.
std::string check_module_axioms(const FiniteModule& m);

}  // namespace ringlab
