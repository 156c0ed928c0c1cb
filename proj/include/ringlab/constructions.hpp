#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Residues mod n, 2 <= n <= cap.
FiniteRing make_zmod(int64_t n, size_t cap = kDefaultRingCap);

// Componentwise operations on tuples; arity >= 2; mixed-radix encoding with
// the first factor varying fastest.
FiniteRing make_product(std::vector<FiniteRing> factors, size_t cap = kDefaultRingCap);

// Quotient by a monic polynomial of degree d >= 1; elements are coefficient
// vectors of length d, constant coefficient fastest in the encoding.
// Coefficients are base elements.
FiniteRing make_poly_quotient(const FiniteRing& base, const std::vector<Idx>& monic,
                              size_t cap = kDefaultRingCap);

// Same, with integer coefficients taken through n -> n*1 in the base.
// Monicity is checked after that reduction.
FiniteRing make_poly_quotient_int(const FiniteRing& base, const std::vector<int64_t>& coeffs,
                                  size_t cap = kDefaultRingCap);

// Idealization A x E with (a,x)(b,y) = (ab, ay+bx). The module must have
// been realized over A.
FiniteRing make_trivial_extension(const FiniteRing& a, const FiniteModule& e,
                                  size_t cap = kDefaultRingCap);

// Realizes a descriptor recursively.
FiniteRing realize(const RingDescriptor& desc, size_t cap = kDefaultRingCap);
FiniteRing realize(const DescPtr& desc, size_t cap = kDefaultRingCap);

}  // namespace ringlab
