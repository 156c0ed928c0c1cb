#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class Method {
  definitional,
  element,
  summand,
  structural,
  two_idempotent,
  product,
  trivial_ext,
};

std::string method_name(Method m);

// A checkable counterexample. Every witness re-verifies against its ring in
// O(size) scans; see verify_witness.
struct Witness {
  enum class Kind {
    vnr_element,         // a with no y solving a = a^2*y
    wvnr_pair,           // e nonunit idempotent, a in Re, a not in Ra^2
    module_annihilation, // a nonunit idempotent of the base, x with a*x != 0
    ideal_no_idempotent, // ideal inside Re with no idempotent generator
  };
  Kind kind;
  Idx a = 0;
  Idx e = 0;
  Idx x = 0;                    // module element (module_annihilation)
  std::vector<Idx> ideal_elems; // ideal_no_idempotent
};

struct Verdict {
  bool value = false;
  Method method = Method::element;
  std::optional<Witness> witness;
};

// Von Neumann regularity by definition: every a has some y with a = a^2*y.
// Witness: the first offending a in dense-index order.
Verdict is_vnr(const FiniteRing& r, Exec exec = Exec::parallel);

// Independent route: a finite ring is VNR iff it is reduced.
bool is_vnr_via_reduced(const FiniteRing& r);

// WVNR by the element criterion: for every nonunit idempotent e and every
// a in Re there is x with a = a^2*x. First failing (e, a) in dense-index
// order is the witness.
Verdict is_wvnr_element(const FiniteRing& r);

// WVNR by the definition: every ideal inside a proper idempotent-generated
// ideal is itself generated by an idempotent. Exhausts the ideal lattice;
// refuses rings above the oracle cap.
Verdict is_wvnr_definitional(const FiniteRing& r, size_t oracle_cap = kDefaultOracleCap);

// WVNR by the summand criterion: Ra is a direct summand for every a in Re,
// e nonunit idempotent. Independent of the definitional route.
Verdict is_wvnr_summand(const FiniteRing& r, size_t oracle_cap = kDefaultOracleCap);

// VNR iff WVNR and every nonunit element lies in Re for some nonunit
// idempotent e. Must equal is_vnr on every finite ring.
bool vnr_characterization(const FiniteRing& r);

// Classifies the infinite extensions R[x], R[x1..xn], R[[x]] by the
// two-idempotent criterion; nothing infinite is constructed.
bool polynomial_extension_wvnr(const FiniteRing& r);

// A x E is WVNR iff A is WVNR and every nonunit idempotent of A kills E.
// Witness (a, x) on annihilation failure; a failing base ring propagates
// its own witness.
Verdict trivial_ext_wvnr_structural(const FiniteRing& a, const FiniteModule& e);

// Re-checks a witness against the ring it was produced on.
bool verify_witness(const FiniteRing& r, const Witness& w);
// module_annihilation witnesses live on the (base, module) pair.
bool verify_trivial_ext_witness(const FiniteRing& a, const FiniteModule& e,
                                const Witness& w);

std::string witness_to_text(const FiniteRing& r, const Witness& w);
std::string trivial_ext_witness_to_text(const FiniteRing& a, const FiniteModule& e,
                                        const Witness& w);

}  // namespace ringlab
