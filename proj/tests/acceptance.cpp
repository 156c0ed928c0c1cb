// Acceptance sweep for the classifier: ten checks, one line each, exit code
// equal to the number of failed checks. Checks 1, 9 and 10 drive the
// installed CLI binary; the rest run in-process against the library.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/constructions.hpp"
#include "ringlab/deciders.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/factor.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

#ifndef RINGLAB_CLI_PATH
#error "RINGLAB_CLI_PATH must point at the rings binary"
#endif

using namespace ringlab;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with a clean size cap, merging stderr into the captured
// output.
CmdResult run_cli(const std::string& args) {
  std::string cmd = "env -u RING_MAX_SIZE " + std::string(RINGLAB_CLI_PATH) + " " + args + " 2>&1";
  CmdResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  if (s < 1.0)
    std::snprintf(buf, sizeof buf, "%.0f ms", s * 1000.0);
  else
    std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

// ---------------------------------------------------------------- 1 -------

Outcome criterion1() {
  run_cli("classify \"Z/12\" --json");  // warm the page cache
  double best = 1e9;
  CmdResult res;
  for (int i = 0; i < 3; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    res = run_cli("classify \"Z/12\" --json");
    best = std::min(best, seconds_since(t0));
  }
  if (res.exit_code != 0) return {false, "exit code " + std::to_string(res.exit_code)};

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(res.output);
  } catch (const std::exception& e) {
    return {false, std::string("bad json: ") + e.what()};
  }
  if (j["wvnr"]["value"] != false) return {false, "wvnr not reported false"};
  auto& el = j["wvnr"]["methods"][0];
  if (el["method"] != "element") return {false, "element method not first"};
  auto& w = el["witness"];
  if (w["e"]["index"] != 9) return {false, "witness e != 9"};
  if (w["a"]["index"] != 6) return {false, "witness a != 6"};
  if (w["a_squared"]["index"] != 0) return {false, "witness trace a^2 != 0"};
  if (w["verified"] != true) return {false, "witness did not re-verify"};
  if (best >= 0.1) return {false, "took " + fmt_seconds(best)};
  return {true, "classify Z/12 pins (e=9, a=6, a^2=0) in " + fmt_seconds(best)};
}

// ---------------------------------------------------------------- 2 -------

Outcome criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<FamilyResult> res = run_verify(Family::equivalence, VerifyBounds{});
  double wall = seconds_since(t0);
  if (res.size() != 1 || res[0].cases == 0) return {false, "empty corpus"};
  if (res[0].failures != 0) {
    std::string detail = std::to_string(res[0].failures) + " disagreements";
    if (!res[0].counterexamples.empty())
      detail += "; first: " + res[0].counterexamples[0].ring + " (" +
                res[0].counterexamples[0].detail + ")";
    return {false, detail};
  }
  if (wall >= 60.0) return {false, "took " + fmt_seconds(wall)};
  return {true, "three deciders agree on " + std::to_string(res[0].cases) +
                    " rings in " + fmt_seconds(wall)};
}

// ---------------------------------------------------------------- 3 -------

Outcome criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  for (int64_t n = 2; n <= 200; ++n) {
    if (zmod_wvnr_structural(n) != is_wvnr_element(make_zmod(n)).value)
      return {false, "mismatch at Z/" + std::to_string(n)};
  }
  size_t polys = 0;
  for (int64_t p : {2, 3}) {
    for (int d = 1;; ++d) {
      size_t size = 1;
      for (int i = 0; i < d; ++i) size *= static_cast<size_t>(p);
      if (size > 64) break;
      for (const GFpPoly& f : monic_polys_of_degree(p, d)) {
        ++polys;
        FiniteRing r = make_poly_quotient_int(make_zmod(p), f.c);
        if (polyquot_wvnr_structural(p, f) != is_wvnr_element(r).value)
          return {false, "mismatch at GF(" + std::to_string(p) + ")[x]/(" +
                             poly_to_text(f) + ")"};
      }
    }
  }
  return {true, "199 moduli and " + std::to_string(polys) +
                    " quotients match the factorization rule in " +
                    fmt_seconds(seconds_since(t0))};
}

// ---------------------------------------------------------------- 4 -------

Outcome criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  size_t cases = 0;
  for (int64_t a = 2; a * a <= 64; ++a)
    for (int64_t b = a; a * b <= 64; ++b) {
      ++cases;
      FiniteRing fa = make_zmod(a);
      FiniteRing fb = make_zmod(b);
      FiniteRing prod = make_product({fa, fb});
      bool wvnr = is_wvnr_element(prod).value;
      bool vnr = is_vnr(prod).value;
      bool factors_vnr = is_vnr(fa).value && is_vnr(fb).value;
      if (wvnr != vnr || vnr != factors_vnr)
        return {false, "rule fails on Z/" + std::to_string(a) + " x Z/" +
                           std::to_string(b)};
    }
  return {true, "product rule holds on " + std::to_string(cases) +
                    " two-factor products in " + fmt_seconds(seconds_since(t0))};
}

// ---------------------------------------------------------------- 5 -------

Outcome criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  size_t cases = 0;
  for (int64_t n = 2; n <= 200; ++n) {
    if (!factor_int(n).prime_power()) continue;
    ++cases;
    FiniteRing r = make_zmod(n);
    if (!is_wvnr_element(r).value)
      return {false, "Z/" + std::to_string(n) + " not weakly regular"};
    if (!has_exactly_two_idempotents(r))
      return {false, "Z/" + std::to_string(n) + " has extra idempotents"};
  }
  for (int64_t p = 2; p <= 64; ++p) {
    if (!is_prime(p)) continue;
    for (int dq = 1;; ++dq) {
      size_t base_size = 1;
      for (int i = 0; i < dq; ++i) base_size *= static_cast<size_t>(p);
      if (base_size > 64) break;
      for (const GFpPoly& q : monic_polys_of_degree(p, dq)) {
        if (!poly_irreducible(p, q)) continue;
        GFpPoly f = q;
        for (int k = 1;; ++k) {
          size_t size = 1;
          for (int i = 0; i < f.degree(); ++i) size *= static_cast<size_t>(p);
          if (size > 64) break;
          ++cases;
          FiniteRing r = make_poly_quotient_int(make_zmod(p), f.c);
          if (!is_wvnr_element(r).value || !has_exactly_two_idempotents(r))
            return {false, "GF(" + std::to_string(p) + ")[x]/(" + poly_to_text(f) +
                               ") breaks the prime-power rule"};
          f = poly_mul(f, q);
        }
      }
    }
  }
  if (!is_wvnr_element(make_zmod(6)).value || is_primary_int(6))
    return {false, "Z/6 sentinel failed"};
  return {true, std::to_string(cases) +
                    " primary quotients are weakly regular with two idempotents; "
                    "Z/6 is weakly regular while 6 is not primary (" +
                    fmt_seconds(seconds_since(t0)) + ")"};
}

// ---------------------------------------------------------------- 6 -------

Outcome criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<DescPtr> corpus = standard_corpus(32);
  std::vector<std::string> errs(corpus.size() * 2);
  kernels::parallel_for(corpus.size() * 2, Exec::parallel, [&](size_t i) {
    const DescPtr& desc = corpus[i / 2];
    int k = 2 + static_cast<int>(i % 2);
    try {
      FiniteRing base = realize(desc);
      size_t proxy_size = base.size();
      for (int j = 1; j < k; ++j) proxy_size *= base.size();
      std::vector<int64_t> xk(static_cast<size_t>(k) + 1, 0);
      xk.back() = 1;
      size_t cap = std::max(kDefaultRingCap, proxy_size);
      FiniteRing proxy = make_poly_quotient_int(base, xk, cap);
      bool lhs = is_wvnr_element(proxy).value;
      bool rhs = has_exactly_two_idempotents(base);
      if (lhs != rhs)
        errs[i] = desc->to_text() + "[x]/(x^" + std::to_string(k) + ") says " +
                  (lhs ? "true" : "false") + " but the base has " +
                  std::to_string(idempotents(base).size()) + " idempotents";
    } catch (const std::exception& e) {
      errs[i] = desc->to_text() + ": " + e.what();
    }
  });
  for (const std::string& e : errs)
    if (!e.empty()) return {false, e};
  if (!polynomial_extension_wvnr(make_zmod(4)))
    return {false, "Z/4 polynomial extension pin failed"};
  if (polynomial_extension_wvnr(make_zmod(6)))
    return {false, "Z/6 polynomial extension pin failed"};
  return {true, "truncated proxies match the idempotent-count rule on " +
                    std::to_string(errs.size()) + " rings in " +
                    fmt_seconds(seconds_since(t0))};
}

// ---------------------------------------------------------------- 7 -------

Outcome criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  size_t cases = 0;
  for (int64_t n = 2; n <= 12; ++n) {
    FiniteRing a = make_zmod(n);
    std::vector<ModuleSpec> specs;
    specs.push_back(ModuleSpec{{ModuleComponentSpec{}}});
    specs.push_back(ModuleSpec{{ModuleComponentSpec{}, ModuleComponentSpec{}}});
    for (int64_t g = 2; g < n; ++g)
      specs.push_back(ModuleSpec{{ModuleComponentSpec{{g}}}});
    for (const ModuleSpec& spec : specs) {
      FiniteModule e = make_module(a, spec);
      if (static_cast<size_t>(n) * e.size() > 64) continue;
      ++cases;
      FiniteRing ext = make_trivial_extension(a, e);

      // idempotents are exactly the base idempotents paired with zero
      if (idempotents(ext) != idempotents(a))
        return {false, ext.text() + ": idempotents are not {(a,0) : a^2 = a}"};

      bool lhs = is_wvnr_element(ext).value;
      bool annihilates = true;
      for (Idx i : idempotents(a)) {
        if (is_unit(a, i)) continue;
        for (Idx x = 0; x < e.size() && annihilates; ++x)
          if (e.scalar(i, x) != e.zero()) annihilates = false;
      }
      bool rhs = is_wvnr_element(a).value && annihilates;
      if (lhs != rhs) return {false, ext.text() + ": extension rule mismatch"};
    }
  }
  for (int64_t n = 2; n <= 12; ++n) {
    FiniteRing a = make_zmod(n);
    FiniteModule e = make_module(a, ModuleSpec{{ModuleComponentSpec{}}});
    FiniteRing ext = make_trivial_extension(a, e);
    if (is_wvnr_element(ext).value != has_exactly_two_idempotents(a))
      return {false, ext.text() + ": self-extension rule mismatch"};
  }
  return {true, "idealization idempotents and the annihilation rule hold on " +
                    std::to_string(cases) + " extensions in " +
                    fmt_seconds(seconds_since(t0))};
}

// ---------------------------------------------------------------- 8 -------

Outcome criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<DescPtr> corpus = standard_corpus(96);
  for (int64_t n = 97; n <= 200; ++n) corpus.push_back(RingDescriptor::zmod(n));
  std::vector<std::string> errs(corpus.size());
  kernels::parallel_for(corpus.size(), Exec::parallel, [&](size_t i) {
    try {
      FiniteRing r = realize(corpus[i]);
      bool direct = is_vnr(r).value;
      if (direct != is_vnr_via_reduced(r) || direct != vnr_characterization(r))
        errs[i] = corpus[i]->to_text() + ": regularity routes disagree";
    } catch (const std::exception& e) {
      errs[i] = corpus[i]->to_text() + ": " + e.what();
    }
  });
  for (const std::string& e : errs)
    if (!e.empty()) return {false, e};
  return {true, "three regularity routes agree on " + std::to_string(corpus.size()) +
                    " rings in " + fmt_seconds(seconds_since(t0))};
}

// ---------------------------------------------------------------- 9 -------

expr::AstPtr gen_ast(std::mt19937& rng, int depth) {
  auto randint = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint32_t>(hi - lo + 1));
  };
  int pick = depth <= 0 ? 0 : randint(0, 9);
  expr::Ast a;
  if (pick < 4) {
    a.kind = expr::Ast::Kind::zmod;
    a.n = randint(2, 97);
  } else if (pick < 6) {
    a.kind = expr::Ast::Kind::product;
    int arity = randint(2, 3);
    for (int i = 0; i < arity; ++i) a.children.push_back(gen_ast(rng, depth - 1));
  } else if (pick < 8) {
    a.kind = expr::Ast::Kind::quotient;
    a.children.push_back(gen_ast(rng, depth - 1));
    int terms = randint(1, 3);
    for (int i = 0; i < terms; ++i) {
      expr::PolyTerm t;
      t.negated = i > 0 && randint(0, 1) == 1;
      t.coeff = randint(1, 7);
      a.poly.terms.push_back(t);
    }
    int e = static_cast<int>(a.poly.terms.size()) + randint(0, 3);
    for (auto& t : a.poly.terms) t.exp = e--;
  } else {
    a.kind = expr::Ast::Kind::trivial;
    a.children.push_back(gen_ast(rng, depth - 1));
    int atoms = randint(1, 2);
    for (int i = 0; i < atoms; ++i) {
      expr::ModAtom m;
      int k = randint(0, 2);
      if (k == 0) {
        m.kind = expr::ModAtom::Kind::self;
      } else if (k == 1) {
        m.kind = expr::ModAtom::Kind::self_pow;
        m.power = randint(1, 4);
      } else {
        m.kind = expr::ModAtom::Kind::self_quot;
        int cnt = randint(1, 3);
        for (int j = 0; j < cnt; ++j) m.annihilators.push_back(randint(0, 9));
      }
      a.module.push_back(m);
    }
  }
  return std::make_shared<expr::Ast>(std::move(a));
}

Outcome criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(0x5eed);
  for (int i = 0; i < 1200; ++i) {
    expr::AstPtr a = gen_ast(rng, 4);
    std::string text = expr::unparse(*a);
    expr::AstPtr back;
    try {
      back = expr::parse(text);
    } catch (const expr::ParseError& e) {
      return {false, "unparse output failed to parse: " + text + " (" + e.what() + ")"};
    }
    if (!expr::ast_equal(*a, *back))
      return {false, "round-trip changed the tree for: " + text};
  }

  struct ErrCase {
    const char* arg;
    const char* needle;
  };
  // non-monic modulus, non-prime GF, size overflow
  std::vector<ErrCase> errors = {
      {"classify 'Z/6[x]/(2*x^2+1)'", "offset 8"},
      {"classify 'GF(4)'", "offset 3"},
      {"classify 'Z/999999'", "offset 0"},
  };
  for (const ErrCase& c : errors) {
    CmdResult res = run_cli(c.arg);
    if (res.exit_code != 2)
      return {false, std::string(c.arg) + " exited " + std::to_string(res.exit_code) +
                         ", expected 2"};
    if (res.output.find(c.needle) == std::string::npos)
      return {false, std::string(c.arg) + " lacks position info (" + c.needle + ")"};
  }
  CmdResult overflow = run_cli("classify 'Z/999999'");
  if (overflow.output.find("999999") == std::string::npos)
    return {false, "overflow error does not report the computed size"};
  return {true, "1200 round-trips and three rejected inputs with positions in " +
                    fmt_seconds(seconds_since(t0))};
}

// --------------------------------------------------------------- 10 -------

Outcome criterion10() {
  auto t0 = std::chrono::steady_clock::now();
  CmdResult res = run_cli("verify all");
  double wall = seconds_since(t0);
  if (res.exit_code != 0)
    return {false, "exit code " + std::to_string(res.exit_code) + "; tail: " +
                       res.output.substr(res.output.size() > 300 ? res.output.size() - 300 : 0)};
  if (res.output.find("total:") == std::string::npos ||
      res.output.find(" 0 failed") == std::string::npos)
    return {false, "missing clean total line"};
  if (wall >= 120.0) return {false, "took " + fmt_seconds(wall)};
  return {true, "verify all is clean in " + fmt_seconds(wall)};
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Outcome (*run)();
  };
  std::vector<Entry> entries = {
      {"pinned Z/12 counterexample via the CLI", criterion1},
      {"decider equivalence over the mixed corpus", criterion2},
      {"structural rule vs element criterion", criterion3},
      {"product regularity rule", criterion4},
      {"primary quotients are weakly regular", criterion5},
      {"truncated polynomial proxies", criterion6},
      {"idealization idempotents and annihilation rule", criterion7},
      {"regularity route cross-check", criterion8},
      {"parser round-trips and error positions", criterion9},
      {"full verification sweep via the CLI", criterion10},
  };

  int failed = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    Outcome out;
    try {
      out = entries[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("unexpected exception: ") + e.what()};
    }
    if (!out.ok) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (out.ok ? "PASS" : "FAIL")
              << " - " << entries[i].label << ": " << out.detail << std::endl;
  }
  if (failed == 0)
    std::cout << "acceptance: all 10 criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << failed << " of 10 criteria failed" << std::endl;
  return failed;
}
