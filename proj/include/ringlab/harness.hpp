#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ringlab/common.hpp"
#include "ringlab/descriptor.hpp"

namespace ringlab {

enum class Family {
  zmod,
  products,
  polyquot,
  trivialext,
  proxy_polynomial,
  equivalence,  // CLI name "th1-equivalence"
  all,
};

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family f);

struct VerifyBounds {
  int64_t zmod_max_n = 200;         // element-vs-structural sweep
  int64_t zmod_oracle_max_n = 96;   // three-route agreement sweep
  size_t product_max_size = 64;
  size_t polyquot_max_size = 64;
  int64_t trivext_max_base = 12;
  size_t trivext_max_size = 64;
  size_t proxy_base_max_size = 32;
  size_t oracle_cap = kDefaultOracleCap;
  size_t ring_cap = kDefaultRingCap;
  Exec exec = Exec::parallel;
};

struct Counterexample {
  std::string ring;    // DSL expression
  std::string detail;  // failed check + witness
};

// Pass/fail tallies for one theorem family over its corpus. A case passes
// when every check run on that ring holds; the first 10 counterexamples are
// kept.
struct FamilyResult {
  std::string family;
  size_t cases = 0;
  size_t passes = 0;
  size_t failures = 0;
  std::vector<Counterexample> counterexamples;
  double wall_ms = 0.0;
};

// Runs one family (or all of them) over corpora generated from the bounds.
// Rings are evaluated in parallel under Exec::parallel; aggregation follows
// corpus generation order either way.
std::vector<FamilyResult> run_verify(Family f, const VerifyBounds& bounds = {});

// The mixed corpus reused by the proxy family and the acceptance sweeps:
// Z/n, two-factor products, GF(2)/GF(3) polynomial quotients, and trivial
// extensions, every carrier of size <= max_size. Deterministic order.
std::vector<DescPtr> standard_corpus(size_t max_size, int64_t trivext_max_base = 12);

std::string verify_to_text(const std::vector<FamilyResult>& results, bool with_timing);
nlohmann::ordered_json verify_to_json(const std::vector<FamilyResult>& results,
                                      bool with_timing);

}  // namespace ringlab
