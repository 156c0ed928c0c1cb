#include "ringlab/deciders.hpp"

#include <algorithm>

#include "ringlab/ideals.hpp"
#include "ringlab/kernels.hpp"

namespace ringlab {

std::string method_name(Method m) {
  switch (m) {
    case Method::definitional: return "definitional";
    case Method::element: return "element";
    case Method::summand: return "summand";
    case Method::structural: return "structural";
    case Method::two_idempotent: return "two-idempotent";
    case Method::product: return "product";
    case Method::trivial_ext: return "trivial-ext";
  }
  return "?";
}

namespace {

std::vector<Idx> nonunit_idempotents(const FiniteRing& r) {
  std::vector<Idx> out;
  for (Idx e : r.structure().idempotents)
    if (!r.structure().units.test(e)) out.push_back(e);
  return out;
}

DenseSet principal_set(const FiniteRing& r, Idx a) {
  DenseSet out(r.size());
  for (Idx x = 0; x < r.size(); ++x) out.set(r.mul(x, a));
  return out;
}

}  // namespace

Verdict is_vnr(const FiniteRing& r, Exec exec) {
  std::vector<uint8_t> mask = kernels::regular_mask(r, exec);
  for (Idx a = 0; a < r.size(); ++a)
    if (!mask[a]) {
      Witness w;
      w.kind = Witness::Kind::vnr_element;
      w.a = a;
      return {false, Method::definitional, w};
    }
  return {true, Method::definitional, std::nullopt};
}

bool is_vnr_via_reduced(const FiniteRing& r) { return r.structure().reduced; }

Verdict is_wvnr_element(const FiniteRing& r) {
  for (Idx e : nonunit_idempotents(r)) {
    DenseSet re = principal_set(r, e);
    for (Idx a : re.to_vector()) {
      if (!kernels::element_regular(r, a)) {
        Witness w;
        w.kind = Witness::Kind::wvnr_pair;
        w.e = e;
        w.a = a;
        return {false, Method::element, w};
      }
    }
  }
  return {true, Method::element, std::nullopt};
}

Verdict is_wvnr_definitional(const FiniteRing& r, size_t oracle_cap) {
  if (r.size() > oracle_cap) throw OracleCapError(r.size(), oracle_cap);
  for (Idx e : nonunit_idempotents(r)) {
    Ideal re = principal_ideal(r, e);
    for (const Ideal& ideal : enumerate_ideals_within(r, re, oracle_cap)) {
      if (!idempotent_generator(r, ideal)) {
        Witness w;
        w.kind = Witness::Kind::ideal_no_idempotent;
        w.e = e;
        w.ideal_elems = ideal.elems.to_vector();
        return {false, Method::definitional, w};
      }
    }
  }
  return {true, Method::definitional, std::nullopt};
}

Verdict is_wvnr_summand(const FiniteRing& r, size_t oracle_cap) {
  if (r.size() > oracle_cap) throw OracleCapError(r.size(), oracle_cap);
  std::vector<Ideal> lattice = enumerate_ideals_within(r, full_ideal(r), oracle_cap);
  DenseSet zero_only(r.size());
  zero_only.set(r.zero());

  auto summand = [&](const Ideal& i) {
    for (const Ideal& k : lattice) {
      DenseSet meet = i.elems;
      meet &= k.elems;
      if (!(meet == zero_only)) continue;
      DenseSet sum(r.size());
      for (Idx x : i.elems.to_vector())
        for (Idx y : k.elems.to_vector()) sum.set(r.add(x, y));
      if (sum.count() == r.size()) return true;
    }
    return false;
  };

  for (Idx e : nonunit_idempotents(r)) {
    DenseSet re = principal_set(r, e);
    for (Idx a : re.to_vector()) {
      if (!summand(principal_ideal(r, a))) {
        Witness w;
        w.kind = Witness::Kind::wvnr_pair;
        w.e = e;
        w.a = a;
        return {false, Method::summand, w};
      }
    }
  }
  return {true, Method::summand, std::nullopt};
}

bool vnr_characterization(const FiniteRing& r) {
  if (!is_wvnr_element(r).value) return false;
  std::vector<DenseSet> covers;
  for (Idx e : nonunit_idempotents(r)) covers.push_back(principal_set(r, e));
  for (Idx a = 0; a < r.size(); ++a) {
    if (r.structure().units.test(a)) continue;
    bool covered = false;
    for (const auto& s : covers)
      if (s.test(a)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool polynomial_extension_wvnr(const FiniteRing& r) {
  return has_exactly_two_idempotents(r);
}

Verdict trivial_ext_wvnr_structural(const FiniteRing& a, const FiniteModule& e) {
  Verdict base = is_wvnr_element(a);
  if (!base.value) return {false, Method::trivial_ext, base.witness};
  for (Idx i : nonunit_idempotents(a))
    for (Idx x = 0; x < e.size(); ++x)
      if (e.scalar(i, x) != e.zero()) {
        Witness w;
        w.kind = Witness::Kind::module_annihilation;
        w.a = i;
        w.x = x;
        return {false, Method::trivial_ext, w};
      }
  return {true, Method::trivial_ext, std::nullopt};
}

bool verify_witness(const FiniteRing& r, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::vnr_element: {
      if (w.a >= r.size()) return false;
      Idx sq = r.mul(w.a, w.a);
      for (Idx y = 0; y < r.size(); ++y)
        if (r.mul(sq, y) == w.a) return false;
      return true;
    }
    case Witness::Kind::wvnr_pair: {
      if (w.a >= r.size() || w.e >= r.size()) return false;
      if (r.mul(w.e, w.e) != w.e) return false;
      if (r.structure().units.test(w.e)) return false;
      bool in_re = false;
      for (Idx t = 0; t < r.size(); ++t)
        if (r.mul(t, w.e) == w.a) {
          in_re = true;
          break;
        }
      if (!in_re) return false;
      Idx sq = r.mul(w.a, w.a);
      for (Idx x = 0; x < r.size(); ++x)
        if (r.mul(sq, x) == w.a) return false;
      return true;
    }
    case Witness::Kind::ideal_no_idempotent: {
      if (w.e >= r.size() || r.mul(w.e, w.e) != w.e) return false;
      if (r.structure().units.test(w.e)) return false;
      DenseSet elems(r.size());
      DenseSet re = principal_set(r, w.e);
      for (Idx v : w.ideal_elems) {
        if (v >= r.size() || !re.test(v)) return false;
        elems.set(v);
      }
      Ideal ideal{r, elems, w.ideal_elems};
      if (!is_valid_ideal(ideal)) return false;
      return !idempotent_generator(r, ideal).has_value();
    }
    case Witness::Kind::module_annihilation:
      return false;  // lives on a (base, module) pair, not a bare ring
  }
  return false;
}

bool verify_trivial_ext_witness(const FiniteRing& a, const FiniteModule& e,
                                const Witness& w) {
  if (w.kind != Witness::Kind::module_annihilation)
    return verify_witness(a, w);  // propagated base-ring witness
  if (w.a >= a.size() || w.x >= e.size()) return false;
  if (a.mul(w.a, w.a) != w.a) return false;
  if (a.structure().units.test(w.a)) return false;
  return e.scalar(w.a, w.x) != e.zero();
}

std::string witness_to_text(const FiniteRing& r, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::vnr_element: {
      Idx sq = r.mul(w.a, w.a);
      return "a=" + r.format(w.a) + " (index " + std::to_string(w.a) +
             "), a^2=" + r.format(sq) + ", no y solves a^2*y = a";
    }
    case Witness::Kind::wvnr_pair: {
      Idx sq = r.mul(w.a, w.a);
      return "e=" + r.format(w.e) + " (index " + std::to_string(w.e) +
             ", nonunit idempotent), a=" + r.format(w.a) + " (index " +
             std::to_string(w.a) + ") lies in Re, a^2=" + r.format(sq) +
             ", no x solves a^2*x = a";
    }
    case Witness::Kind::ideal_no_idempotent: {
      std::string elems;
      for (size_t i = 0; i < w.ideal_elems.size(); ++i) {
        if (i) elems += ",";
        elems += r.format(w.ideal_elems[i]);
      }
      return "ideal {" + elems + "} inside Re for e=" + r.format(w.e) +
             " (index " + std::to_string(w.e) + ") has no idempotent generator";
    }
    case Witness::Kind::module_annihilation:
      return "module annihilation witness requires the (base, module) pair";
  }
  return "";
}

std::string trivial_ext_witness_to_text(const FiniteRing& a, const FiniteModule& e,
                                        const Witness& w) {
  if (w.kind != Witness::Kind::module_annihilation) return witness_to_text(a, w);
  return "a=" + a.format(w.a) + " (index " + std::to_string(w.a) +
         ", nonunit idempotent of the base), x=" + e.format(w.x) + " (index " +
         std::to_string(w.x) + "), a*x=" + e.format(e.scalar(w.a, w.x)) + " != 0";
}

}  // namespace ringlab
