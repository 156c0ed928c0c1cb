#include "ringlab/report.hpp"

#include <chrono>
#include <sstream>

#include "ringlab/constructions.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/factor.hpp"
#include "ringlab/ideals.hpp"

namespace ringlab {

namespace {

std::string int_factorization_text(int64_t n) {
  auto fac = factor_int(n);
  std::string out;
  for (size_t i = 0; i < fac.factors.size(); ++i) {
    if (i) out += " * ";
    out += std::to_string(fac.factors[i].first);
    if (fac.factors[i].second > 1)
      out += "^" + std::to_string(fac.factors[i].second);
  }
  return out;
}

std::string poly_factorization_text(const PolyFactorization& fac) {
  std::string out;
  if (fac.unit != 1) out += std::to_string(fac.unit);
  for (const auto& [q, e] : fac.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + poly_to_text(q) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

MethodReport skipped(Method m, size_t size, size_t cap) {
  MethodReport rep;
  rep.method = m;
  rep.ran = false;
  rep.skip_reason = "size " + std::to_string(size) + " exceeds oracle cap " +
                    std::to_string(cap);
  return rep;
}

// The structural route on a trivial extension produces witnesses that live
// on the (base, module) pair; everything else lives on the ring itself.
bool witness_on_base(const ClassificationReport& ctx, Method method, const Witness& w) {
  return ctx.trivext_base && (w.kind == Witness::Kind::module_annihilation ||
                              method == Method::structural ||
                              method == Method::trivial_ext);
}

void attach_witness(MethodReport& rep, const ClassificationReport& ctx) {
  if (!rep.witness) return;
  const Witness& w = *rep.witness;
  if (witness_on_base(ctx, rep.method, w)) {
    rep.witness_verified =
        verify_trivial_ext_witness(*ctx.trivext_base, *ctx.trivext_module, w);
    rep.witness_text =
        trivial_ext_witness_to_text(*ctx.trivext_base, *ctx.trivext_module, w);
  } else {
    rep.witness_verified = verify_witness(ctx.ring, w);
    rep.witness_text = witness_to_text(ctx.ring, w);
  }
}

// Structural fast path for the constructions that admit one, with the
// human-readable facts that justify it.
std::optional<bool> structural_route(const ClassificationReport& ctx,
                                     const DescPtr& desc,
                                     std::vector<std::string>& facts,
                                     std::optional<Witness>& witness) {
  if (!desc) return std::nullopt;
  switch (desc->kind) {
    case RingDescriptor::Kind::zmod: {
      int64_t n = desc->modulus;
      auto fac = factor_int(n);
      bool value = fac.prime_power() || fac.squarefree();
      std::string shape = fac.prime_power()
                              ? "a prime power"
                              : fac.squarefree() ? "squarefree"
                                                 : "neither a prime power nor squarefree";
      std::string consequence =
          value ? (fac.squarefree() && !fac.prime_power()
                       ? "a product of fields (von Neumann regular)"
                       : "local, hence weakly regular")
                : "not weakly regular";
      facts.push_back(std::to_string(n) + " = " + int_factorization_text(n) + " is " +
                      shape + ", so Z/" + std::to_string(n) + " is " + consequence);
      return value;
    }
    case RingDescriptor::Kind::poly_quotient: {
      const auto& base = desc->base;
      if (!base || base->kind != RingDescriptor::Kind::zmod || !is_prime(base->modulus))
        return std::nullopt;
      int64_t p = base->modulus;
      GFpPoly f = GFpPoly::make(p, desc->poly);
      if (f.degree() < 1) return std::nullopt;
      auto fac = factor_poly(p, f);
      bool value = fac.prime_power() || fac.squarefree();
      std::string shape = fac.prime_power()
                              ? "a power of one irreducible"
                              : fac.squarefree() ? "squarefree"
                                                 : "neither a power of one irreducible "
                                                   "nor squarefree";
      facts.push_back(poly_to_text(f) + " = " + poly_factorization_text(fac) +
                      " over GF(" + std::to_string(p) + ") is " + shape + ", so the " +
                      "quotient is " + (value ? "weakly regular" : "not weakly regular"));
      return value;
    }
    case RingDescriptor::Kind::trivial_ext: {
      Verdict v = trivial_ext_wvnr_structural(*ctx.trivext_base, *ctx.trivext_module);
      facts.push_back(
          "a trivial extension is weakly regular exactly when the base ring is and "
          "every nonunit idempotent of the base annihilates the module");
      witness = v.witness;
      return v.value;
    }
    case RingDescriptor::Kind::product:
      return std::nullopt;  // covered by the product method
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const std::string& text, const ClassifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();

  expr::AstPtr ast = expr::parse(text);
  FiniteRing ring = expr::elaborate(*ast, opts.ring_cap);

  ClassificationReport rep;
  rep.input = text;
  rep.ring = ring;
  rep.size = ring.size();
  rep.canonical = ring.descriptor() ? ring.descriptor()->to_text() : expr::unparse(*ast);

  const DescPtr& desc = ring.descriptor();
  if (desc && desc->kind == RingDescriptor::Kind::trivial_ext) {
    FiniteRing base = realize(desc->base, opts.ring_cap);
    rep.trivext_module = make_module(base, desc->module, opts.ring_cap);
    rep.trivext_base = std::move(base);
  }

  const auto& idem = ring.structure().idempotents;
  rep.idempotent_count = idem.size();
  rep.idempotents_shown.assign(idem.begin(),
                               idem.begin() + std::min<size_t>(idem.size(), 32));

  // VNR by definition, by reducedness, and by the idempotent-cover criterion
  Verdict vnr = is_vnr(ring, opts.exec);
  rep.vnr = vnr.value;
  rep.vnr_witness = vnr.witness;
  if (rep.vnr_witness) rep.vnr_witness_verified = verify_witness(ring, *rep.vnr_witness);
  rep.vnr_via_reduced = is_vnr_via_reduced(ring);
  rep.vnr_characterization = vnr_characterization(ring);
  rep.vnr_agree =
      rep.vnr == rep.vnr_via_reduced && rep.vnr == rep.vnr_characterization;

  // WVNR: element route always; lattice oracles under the cap; structural
  // routes where the construction admits one
  {
    MethodReport m;
    m.method = Method::element;
    m.ran = true;
    Verdict v = is_wvnr_element(ring);
    m.value = v.value;
    m.witness = v.witness;
    attach_witness(m, rep);
    rep.wvnr_methods.push_back(std::move(m));
  }
  bool oracles_ok = ring.size() <= opts.oracle_cap || opts.force_oracle;
  size_t oracle_cap = std::max(opts.oracle_cap, opts.force_oracle ? ring.size() : 0);
  if (oracles_ok) {
    {
      MethodReport m;
      m.method = Method::definitional;
      m.ran = true;
      Verdict v = is_wvnr_definitional(ring, oracle_cap);
      m.value = v.value;
      m.witness = v.witness;
      attach_witness(m, rep);
      rep.wvnr_methods.push_back(std::move(m));
    }
    {
      MethodReport m;
      m.method = Method::summand;
      m.ran = true;
      Verdict v = is_wvnr_summand(ring, oracle_cap);
      m.value = v.value;
      m.witness = v.witness;
      attach_witness(m, rep);
      rep.wvnr_methods.push_back(std::move(m));
    }
  } else {
    rep.wvnr_methods.push_back(skipped(Method::definitional, ring.size(), opts.oracle_cap));
    rep.wvnr_methods.push_back(skipped(Method::summand, ring.size(), opts.oracle_cap));
  }

  if (desc && desc->kind == RingDescriptor::Kind::product) {
    // a product of two or more rings is weakly regular iff it is von
    // Neumann regular, i.e. iff it is reduced
    MethodReport m;
    m.method = Method::product;
    m.ran = true;
    m.value = is_vnr_via_reduced(ring);
    rep.wvnr_methods.push_back(std::move(m));
    rep.structural_facts.push_back(
        "a product of two or more rings is weakly regular exactly when it is von "
        "Neumann regular (all factors reduced)");
  }

  {
    std::optional<Witness> w;
    auto value = structural_route(rep, desc, rep.structural_facts, w);
    if (value) {
      MethodReport m;
      m.method = desc && desc->kind == RingDescriptor::Kind::trivial_ext
                     ? Method::trivial_ext
                     : Method::structural;
      m.ran = true;
      m.value = *value;
      m.witness = w;
      attach_witness(m, rep);
      rep.wvnr_methods.push_back(std::move(m));
    }
  }

  if (has_exactly_two_idempotents(ring))
    rep.structural_facts.push_back(
        "exactly two idempotents: every proper idempotent-generated ideal is {0}, "
        "so the ring is weakly regular");

  rep.wvnr = rep.wvnr_methods.front().value;
  for (const auto& m : rep.wvnr_methods)
    if (m.ran && m.value != rep.wvnr) rep.wvnr_agree = false;

  rep.poly_extension_wvnr = polynomial_extension_wvnr(ring);

  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

// ------------------------------------------------------------ rendering ----

namespace {

nlohmann::ordered_json element_json(const FiniteRing& r, Idx a) {
  return {{"index", a}, {"text", r.format(a)}};
}

nlohmann::ordered_json witness_json(const ClassificationReport& rep, Method method,
                                    const Witness& w, bool verified,
                                    const std::string& text) {
  nlohmann::ordered_json j;
  const FiniteRing& r =
      witness_on_base(rep, method, w) ? *rep.trivext_base : rep.ring;
  switch (w.kind) {
    case Witness::Kind::vnr_element:
      j["kind"] = "vnr-element";
      j["a"] = element_json(r, w.a);
      j["a_squared"] = element_json(r, r.mul(w.a, w.a));
      break;
    case Witness::Kind::wvnr_pair:
      j["kind"] = "wvnr-pair";
      j["e"] = element_json(r, w.e);
      j["a"] = element_json(r, w.a);
      j["a_squared"] = element_json(r, r.mul(w.a, w.a));
      break;
    case Witness::Kind::ideal_no_idempotent: {
      j["kind"] = "ideal-no-idempotent";
      j["e"] = element_json(r, w.e);
      nlohmann::ordered_json elems = nlohmann::ordered_json::array();
      for (Idx v : w.ideal_elems) elems.push_back(element_json(r, v));
      j["ideal"] = std::move(elems);
      break;
    }
    case Witness::Kind::module_annihilation: {
      j["kind"] = "module-annihilation";
      const FiniteRing& base = *rep.trivext_base;
      const FiniteModule& mod = *rep.trivext_module;
      j["a"] = {{"index", w.a}, {"text", base.format(w.a)}};
      j["x"] = {{"index", w.x}, {"text", mod.format(w.x)}};
      j["a_times_x"] = {{"index", mod.scalar(w.a, w.x)},
                        {"text", mod.format(mod.scalar(w.a, w.x))}};
      break;
    }
  }
  (void)method;
  j["text"] = text;
  j["verified"] = verified;
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const ClassificationReport& rep, bool with_timing) {
  nlohmann::ordered_json j;
  j["input"] = rep.input;
  j["canonical"] = rep.canonical;
  j["size"] = rep.size;

  {
    nlohmann::ordered_json idem;
    idem["count"] = rep.idempotent_count;
    nlohmann::ordered_json shown = nlohmann::ordered_json::array();
    for (Idx e : rep.idempotents_shown) shown.push_back(element_json(rep.ring, e));
    idem["shown"] = std::move(shown);
    idem["truncated"] = rep.idempotent_count > rep.idempotents_shown.size();
    j["idempotents"] = std::move(idem);
  }

  {
    nlohmann::ordered_json v;
    v["value"] = rep.vnr;
    v["via_reduced"] = rep.vnr_via_reduced;
    v["characterization"] = rep.vnr_characterization;
    v["agree"] = rep.vnr_agree;
    if (rep.vnr_witness)
      v["witness"] =
          witness_json(rep, Method::definitional, *rep.vnr_witness,
                       rep.vnr_witness_verified, witness_to_text(rep.ring, *rep.vnr_witness));
    else
      v["witness"] = nullptr;
    j["vnr"] = std::move(v);
  }

  {
    nlohmann::ordered_json w;
    w["value"] = rep.wvnr;
    w["agree"] = rep.wvnr_agree;
    nlohmann::ordered_json methods = nlohmann::ordered_json::array();
    for (const auto& m : rep.wvnr_methods) {
      nlohmann::ordered_json mj;
      mj["method"] = method_name(m.method);
      mj["ran"] = m.ran;
      if (!m.ran) {
        mj["skip_reason"] = m.skip_reason;
      } else {
        mj["value"] = m.value;
        if (m.witness)
          mj["witness"] = witness_json(rep, m.method, *m.witness, m.witness_verified,
                                       m.witness_text);
        else
          mj["witness"] = nullptr;
      }
      methods.push_back(std::move(mj));
    }
    w["methods"] = std::move(methods);
    j["wvnr"] = std::move(w);
  }

  j["structural_facts"] = rep.structural_facts;
  j["polynomial_extension"] = {
      {"wvnr", rep.poly_extension_wvnr},
      {"note",
       "classifies R[x], R[x1..xn], R[[x]] by the idempotent-count criterion; "
       "no infinite ring is constructed"}};
  j["disagreement"] = rep.disagreement();
  if (with_timing) j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

std::string report_to_text(const ClassificationReport& rep, bool with_timing) {
  std::ostringstream out;
  out << "ring: " << rep.canonical << "  (size " << rep.size << ")\n";
  if (rep.input != rep.canonical) out << "input: " << rep.input << "\n";

  out << "idempotents (" << rep.idempotent_count << "): ";
  for (size_t i = 0; i < rep.idempotents_shown.size(); ++i) {
    if (i) out << " ";
    out << rep.ring.format(rep.idempotents_shown[i]);
  }
  if (rep.idempotent_count > rep.idempotents_shown.size()) out << " ...";
  out << "\n";

  out << "vnr: " << (rep.vnr ? "true" : "false") << "  (via reduced: "
      << (rep.vnr_via_reduced ? "true" : "false") << ", via idempotent cover: "
      << (rep.vnr_characterization ? "true" : "false")
      << (rep.vnr_agree ? ", agree" : ", DISAGREEMENT") << ")\n";
  if (rep.vnr_witness)
    out << "  witness: " << witness_to_text(rep.ring, *rep.vnr_witness)
        << (rep.vnr_witness_verified ? "  [verified]" : "  [UNVERIFIED]") << "\n";

  out << "wvnr: " << (rep.wvnr ? "true" : "false")
      << (rep.wvnr_agree ? "  (methods agree)" : "  (DISAGREEMENT)") << "\n";
  for (const auto& m : rep.wvnr_methods) {
    out << "  " << method_name(m.method) << ": ";
    if (!m.ran) {
      out << "skipped (" << m.skip_reason << ")\n";
      continue;
    }
    out << (m.value ? "true" : "false") << "\n";
    if (m.witness)
      out << "    witness: " << m.witness_text
          << (m.witness_verified ? "  [verified]" : "  [UNVERIFIED]") << "\n";
  }

  if (!rep.structural_facts.empty()) {
    out << "facts:\n";
    for (const auto& f : rep.structural_facts) out << "  - " << f << "\n";
  }

  out << "polynomial extension (R[x], R[x1..xn], R[[x]]): "
      << (rep.poly_extension_wvnr ? "weakly regular" : "not weakly regular")
      << "  [" << rep.idempotent_count << " idempotent"
      << (rep.idempotent_count == 1 ? "" : "s")
      << "; classified by count, no infinite ring constructed]\n";

  if (with_timing) out << "elapsed: " << rep.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace ringlab
