#include "ringlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "ringlab/constructions.hpp"
#include "ringlab/deciders.hpp"
#include "ringlab/factor.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/module.hpp"

namespace ringlab {

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "zmod") return Family::zmod;
  if (name == "products") return Family::products;
  if (name == "polyquot") return Family::polyquot;
  if (name == "trivialext") return Family::trivialext;
  if (name == "proxy-polynomial") return Family::proxy_polynomial;
  if (name == "th1-equivalence") return Family::equivalence;
  if (name == "all") return Family::all;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::zmod: return "zmod";
    case Family::products: return "products";
    case Family::polyquot: return "polyquot";
    case Family::trivialext: return "trivialext";
    case Family::proxy_polynomial: return "proxy-polynomial";
    case Family::equivalence: return "th1-equivalence";
    case Family::all: return "all";
  }
  return "?";
}

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Cross-route checks every small corpus ring must satisfy: the three VNR
// routes agree, VNR implies WVNR, two idempotents imply WVNR, and any
// failure witness re-verifies.
std::string common_checks(const FiniteRing& r) {
  Verdict vnr = is_vnr(r);
  bool red = is_vnr_via_reduced(r);
  bool chr = vnr_characterization(r);
  if (vnr.value != red || vnr.value != chr)
    return "vnr routes disagree: definitional=" + bool_text(vnr.value) +
           " reduced=" + bool_text(red) + " idempotent-cover=" + bool_text(chr);
  if (!vnr.value) {
    if (!vnr.witness || !verify_witness(r, *vnr.witness))
      return "vnr failure witness did not re-verify";
  }

  Verdict wv = is_wvnr_element(r);
  if (vnr.value && !wv.value) return "von Neumann regular but not weakly regular";
  if (has_exactly_two_idempotents(r) && !wv.value)
    return "two idempotents but not weakly regular";
  if (!wv.value) {
    if (!wv.witness || !verify_witness(r, *wv.witness))
      return "wvnr failure witness did not re-verify";
  }
  return "";
}

struct Case {
  DescPtr desc;
  // trivial-extension cases that must also satisfy the self-extension rule
  bool self_ext_rule = false;
};

struct FamilyPlan {
  Family family;
  std::vector<Case> cases;
  std::string (*run)(const Case&, const VerifyBounds&) = nullptr;
};

// ------------------------------------------------------------ zmod ----

std::string run_zmod_case(const Case& c, const VerifyBounds& bounds) {
  int64_t n = c.desc->modulus;
  FiniteRing r = realize(c.desc, bounds.ring_cap);

  bool structural = zmod_wvnr_structural(n);
  bool element = is_wvnr_element(r).value;
  if (structural != element)
    return "factorization rule says " + bool_text(structural) +
           " but the element route says " + bool_text(element);

  if (factor_int(n).prime_power()) {
    if (!element) return "prime power modulus but not weakly regular";
    if (!has_exactly_two_idempotents(r))
      return "prime power modulus but more than two idempotents";
  }
  return common_checks(r);
}

// -------------------------------------------------------- products ----

std::string run_product_case(const Case& c, const VerifyBounds& bounds) {
  FiniteRing r = realize(c.desc, bounds.ring_cap);

  bool all_factors_vnr = true;
  for (const auto& f : c.desc->factors)
    if (!is_vnr_via_reduced(realize(f, bounds.ring_cap))) {
      all_factors_vnr = false;
      break;
    }

  bool wvnr = is_wvnr_element(r).value;
  bool vnr = is_vnr(r).value;
  if (wvnr != vnr || vnr != all_factors_vnr)
    return "product rule broken: wvnr=" + bool_text(wvnr) + " vnr=" + bool_text(vnr) +
           " all-factors-vnr=" + bool_text(all_factors_vnr);
  return common_checks(r);
}

// -------------------------------------------------------- polyquot ----

std::string run_polyquot_case(const Case& c, const VerifyBounds& bounds) {
  int64_t p = c.desc->base->modulus;
  GFpPoly f = GFpPoly::make(p, c.desc->poly);
  FiniteRing r = realize(c.desc, bounds.ring_cap);

  bool structural = polyquot_wvnr_structural(p, f);
  bool element = is_wvnr_element(r).value;
  if (structural != element)
    return "factorization rule says " + bool_text(structural) +
           " but the element route says " + bool_text(element);

  if (factor_poly(p, f).prime_power()) {
    if (!element) return "irreducible-power modulus but not weakly regular";
    if (!has_exactly_two_idempotents(r))
      return "irreducible-power modulus but more than two idempotents";
  }
  return common_checks(r);
}

// ------------------------------------------------------ trivialext ----

std::string run_trivialext_case(const Case& c, const VerifyBounds& bounds) {
  FiniteRing base = realize(c.desc->base, bounds.ring_cap);
  FiniteModule mod = make_module(base, c.desc->module, bounds.ring_cap);
  FiniteRing ext = make_trivial_extension(base, mod, bounds.ring_cap);

  // idempotents of the extension are exactly (a, 0) for idempotent a; with
  // the base-component-fastest packing those have the same dense indices
  const auto& base_idem = base.structure().idempotents;
  const auto& ext_idem = ext.structure().idempotents;
  if (std::vector<Idx>(ext_idem.begin(), ext_idem.end()) !=
      std::vector<Idx>(base_idem.begin(), base_idem.end()))
    return "extension idempotents are not {(a,0) : a idempotent in the base}";

  Verdict structural = trivial_ext_wvnr_structural(base, mod);
  Verdict element = is_wvnr_element(ext);
  if (structural.value != element.value)
    return "structural rule says " + bool_text(structural.value) +
           " but the element route says " + bool_text(element.value);
  if (!structural.value &&
      (!structural.witness ||
       !verify_trivial_ext_witness(base, mod, *structural.witness)))
    return "structural failure witness did not re-verify";

  if (c.self_ext_rule) {
    bool two = has_exactly_two_idempotents(base);
    if (element.value != two)
      return "self-extension rule broken: wvnr=" + bool_text(element.value) +
             " but base has " + std::to_string(base_idem.size()) + " idempotents";
  }
  return common_checks(ext);
}

// ------------------------------------------------- proxy polynomial ----

std::string run_proxy_case(const Case& c, const VerifyBounds& bounds) {
  // c.desc is base[x]/(x^k); the realized proxy may exceed the default cap
  FiniteRing base = realize(c.desc->base, bounds.ring_cap);
  size_t k = c.desc->poly.size() - 1;
  size_t proxy_size = 1;
  for (size_t i = 0; i < k; ++i) proxy_size *= base.size();
  size_t cap = std::max(bounds.ring_cap, proxy_size);

  FiniteRing proxy = make_poly_quotient_int(base, c.desc->poly, cap);

  bool wvnr = is_wvnr_element(proxy).value;
  bool two = has_exactly_two_idempotents(base);
  if (wvnr != two)
    return "truncated proxy says " + bool_text(wvnr) + " but the base has " +
           std::to_string(base.structure().idempotents.size()) + " idempotents";
  return "";
}

// ----------------------------------------------------- equivalence ----

std::string run_equivalence_case(const Case& c, const VerifyBounds& bounds) {
  FiniteRing r = realize(c.desc, bounds.ring_cap);
  if (r.size() > bounds.oracle_cap)
    return "corpus ring exceeds the oracle cap";

  Verdict definitional = is_wvnr_definitional(r, bounds.oracle_cap);
  Verdict element = is_wvnr_element(r);
  Verdict summand = is_wvnr_summand(r, bounds.oracle_cap);
  if (definitional.value != element.value || element.value != summand.value)
    return "routes disagree: definitional=" + bool_text(definitional.value) +
           " element=" + bool_text(element.value) +
           " summand=" + bool_text(summand.value);
  for (const Verdict* v : {&definitional, &element, &summand}) {
    if (v->value) continue;
    if (!v->witness || !verify_witness(r, *v->witness))
      return method_name(v->method) + " failure witness did not re-verify";
  }
  return "";
}

// --------------------------------------------------------- corpora ----

std::vector<int64_t> annihilator_choices(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t g = 2; g < n; ++g) out.push_back(g);
  return out;
}

ModuleSpec spec_self() { return ModuleSpec{{ModuleComponentSpec{}}}; }
ModuleSpec spec_self_pow2() {
  return ModuleSpec{{ModuleComponentSpec{}, ModuleComponentSpec{}}};
}
ModuleSpec spec_self_quot(int64_t g) { return ModuleSpec{{ModuleComponentSpec{{g}}}}; }

size_t module_size(int64_t n, const ModuleSpec& spec) {
  size_t total = 1;
  for (const auto& comp : spec.components) {
    if (comp.annihilators.empty()) {
      total *= static_cast<size_t>(n);
    } else {
      // over Z/n the quotient by (g) has gcd(g, n) elements
      int64_t g = std::gcd(comp.annihilators[0] % n, n);
      total *= static_cast<size_t>(g == 0 ? n : g);
    }
  }
  return total;
}

// A=Z/n trivial extensions with |A x E| <= max_size.
std::vector<DescPtr> trivext_grid(int64_t max_base, size_t max_size) {
  std::vector<DescPtr> out;
  for (int64_t n = 2; n <= max_base; ++n) {
    std::vector<ModuleSpec> specs{spec_self(), spec_self_pow2()};
    for (int64_t g : annihilator_choices(n)) specs.push_back(spec_self_quot(g));
    for (const ModuleSpec& spec : specs) {
      size_t total = static_cast<size_t>(n) * module_size(n, spec);
      if (total <= max_size)
        out.push_back(RingDescriptor::trivial_ext(RingDescriptor::zmod(n), spec));
    }
  }
  return out;
}

std::vector<DescPtr> zmod_corpus(int64_t max_n) {
  std::vector<DescPtr> out;
  for (int64_t n = 2; n <= max_n; ++n) out.push_back(RingDescriptor::zmod(n));
  return out;
}

std::vector<DescPtr> product_pairs(size_t max_size) {
  std::vector<DescPtr> out;
  for (int64_t a = 2; static_cast<size_t>(a * a) <= max_size; ++a)
    for (int64_t b = a; static_cast<size_t>(a * b) <= max_size; ++b)
      out.push_back(
          RingDescriptor::product({RingDescriptor::zmod(a), RingDescriptor::zmod(b)}));
  return out;
}

std::vector<DescPtr> product_triples(size_t max_size) {
  std::vector<DescPtr> out;
  for (int64_t a = 2; static_cast<size_t>(a * a * a) <= max_size; ++a)
    for (int64_t b = a; static_cast<size_t>(a * b * b) <= max_size; ++b)
      for (int64_t c = b; static_cast<size_t>(a * b * c) <= max_size; ++c)
        out.push_back(RingDescriptor::product(
            {RingDescriptor::zmod(a), RingDescriptor::zmod(b), RingDescriptor::zmod(c)}));
  return out;
}

void append_polyquots(std::vector<DescPtr>& out, int64_t p, size_t max_size) {
  for (int d = 1;; ++d) {
    size_t size = 1;
    for (int i = 0; i < d; ++i) size *= static_cast<size_t>(p);
    if (size > max_size) break;
    for (const GFpPoly& f : monic_polys_of_degree(p, d))
      out.push_back(RingDescriptor::poly_quotient(RingDescriptor::zmod(p), f.c));
  }
}

std::vector<DescPtr> polyquot_corpus(size_t max_size) {
  std::vector<DescPtr> out;
  for (int64_t p : {2, 3}) append_polyquots(out, p, max_size);
  return out;
}

// Every GF(p)[x]/(f) with realized size <= max_size, all primes included.
std::vector<DescPtr> polyquot_corpus_all_primes(size_t max_size) {
  std::vector<DescPtr> out;
  for (int64_t p = 2; static_cast<size_t>(p) <= max_size; ++p)
    if (is_prime(p)) append_polyquots(out, p, max_size);
  return out;
}

FamilyPlan make_plan(Family f, const VerifyBounds& bounds) {
  FamilyPlan plan;
  plan.family = f;
  switch (f) {
    case Family::zmod: {
      for (auto& d : zmod_corpus(bounds.zmod_max_n)) plan.cases.push_back({d});
      plan.run = run_zmod_case;
      break;
    }
    case Family::products: {
      for (auto& d : product_pairs(bounds.product_max_size)) plan.cases.push_back({d});
      for (auto& d : product_triples(bounds.product_max_size)) plan.cases.push_back({d});
      plan.run = run_product_case;
      break;
    }
    case Family::polyquot: {
      for (auto& d : polyquot_corpus(bounds.polyquot_max_size)) plan.cases.push_back({d});
      plan.run = run_polyquot_case;
      break;
    }
    case Family::trivialext: {
      for (auto& d : trivext_grid(bounds.trivext_max_base, bounds.trivext_max_size)) {
        bool self_ext = d->module.components.size() == 1 &&
                        d->module.components[0].annihilators.empty();
        plan.cases.push_back({d, self_ext});
      }
      // the self-extension rule is checked for every base up to the bound,
      // even where A x A exceeds the grid's size limit
      for (int64_t n = 2; n <= bounds.trivext_max_base; ++n) {
        size_t total = static_cast<size_t>(n) * static_cast<size_t>(n);
        if (total > bounds.trivext_max_size)
          plan.cases.push_back(
              {RingDescriptor::trivial_ext(RingDescriptor::zmod(n), spec_self()), true});
      }
      plan.run = run_trivialext_case;
      break;
    }
    case Family::proxy_polynomial: {
      for (auto& base : standard_corpus(bounds.proxy_base_max_size, bounds.trivext_max_base))
        for (int k : {2, 3}) {
          std::vector<int64_t> poly(static_cast<size_t>(k) + 1, 0);
          poly.back() = 1;
          plan.cases.push_back({RingDescriptor::poly_quotient(base, std::move(poly))});
        }
      plan.run = run_proxy_case;
      break;
    }
    case Family::equivalence: {
      for (auto& d : zmod_corpus(bounds.zmod_oracle_max_n)) plan.cases.push_back({d});
      for (auto& d : product_pairs(bounds.product_max_size)) plan.cases.push_back({d});
      for (auto& d : polyquot_corpus_all_primes(bounds.polyquot_max_size))
        plan.cases.push_back({d});
      for (auto& d : trivext_grid(bounds.trivext_max_base, bounds.trivext_max_size))
        plan.cases.push_back({d});
      plan.run = run_equivalence_case;
      break;
    }
    case Family::all:
      break;
  }
  return plan;
}

FamilyResult run_plan(const FamilyPlan& plan, const VerifyBounds& bounds) {
  auto t0 = std::chrono::steady_clock::now();

  std::vector<std::string> details(plan.cases.size());
  kernels::parallel_for(plan.cases.size(), bounds.exec, [&](size_t i) {
    try {
      details[i] = plan.run(plan.cases[i], bounds);
    } catch (const std::exception& e) {
      details[i] = std::string("error: ") + e.what();
    }
  });

  FamilyResult result;
  result.family = family_name(plan.family);
  result.cases = plan.cases.size();
  for (size_t i = 0; i < plan.cases.size(); ++i) {
    if (details[i].empty()) {
      ++result.passes;
    } else {
      ++result.failures;
      if (result.counterexamples.size() < 10)
        result.counterexamples.push_back({plan.cases[i].desc->to_text(), details[i]});
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  result.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return result;
}

}  // namespace

std::vector<DescPtr> standard_corpus(size_t max_size, int64_t trivext_max_base) {
  std::vector<DescPtr> out;
  for (auto& d : zmod_corpus(static_cast<int64_t>(max_size))) out.push_back(d);
  for (auto& d : product_pairs(max_size)) out.push_back(d);
  for (auto& d : polyquot_corpus(max_size)) out.push_back(d);
  for (auto& d : trivext_grid(trivext_max_base, max_size)) out.push_back(d);
  return out;
}

std::vector<FamilyResult> run_verify(Family f, const VerifyBounds& bounds) {
  std::vector<Family> families;
  if (f == Family::all)
    families = {Family::zmod, Family::products, Family::polyquot, Family::trivialext,
                Family::proxy_polynomial, Family::equivalence};
  else
    families = {f};

  std::vector<FamilyResult> out;
  for (Family fam : families) out.push_back(run_plan(make_plan(fam, bounds), bounds));
  return out;
}

std::string verify_to_text(const std::vector<FamilyResult>& results, bool with_timing) {
  std::ostringstream out;
  size_t cases = 0, passes = 0, failures = 0;
  for (const auto& r : results) {
    out << "family " << r.family << ": " << r.cases << " cases, " << r.passes
        << " passed, " << r.failures << " failed";
    if (with_timing) out << "  (" << static_cast<int64_t>(r.wall_ms) << " ms)";
    out << "\n";
    for (const auto& ce : r.counterexamples)
      out << "  counterexample: " << ce.ring << " -- " << ce.detail << "\n";
    cases += r.cases;
    passes += r.passes;
    failures += r.failures;
  }
  out << "total: " << cases << " cases, " << passes << " passed, " << failures
      << " failed\n";
  return out.str();
}

nlohmann::ordered_json verify_to_json(const std::vector<FamilyResult>& results,
                                      bool with_timing) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json fams = nlohmann::ordered_json::array();
  size_t cases = 0, failures = 0;
  for (const auto& r : results) {
    nlohmann::ordered_json fj;
    fj["family"] = r.family;
    fj["cases"] = r.cases;
    fj["passes"] = r.passes;
    fj["failures"] = r.failures;
    nlohmann::ordered_json ces = nlohmann::ordered_json::array();
    for (const auto& ce : r.counterexamples)
      ces.push_back({{"ring", ce.ring}, {"detail", ce.detail}});
    fj["counterexamples"] = std::move(ces);
    if (with_timing) fj["wall_ms"] = r.wall_ms;
    fams.push_back(std::move(fj));
    cases += r.cases;
    failures += r.failures;
  }
  j["families"] = std::move(fams);
  j["total_cases"] = cases;
  j["total_failures"] = failures;
  j["ok"] = failures == 0;
  return j;
}

}  // namespace ringlab
