#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/common.hpp"
#include "ringlab/deciders.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct MethodReport {
  Method method;
  bool ran = false;
  std::string skip_reason;  // set when !ran
  bool value = false;
  std::optional<Witness> witness;
  bool witness_verified = false;
  std::string witness_text;
};

// Per-ring verdicts with re-verified witnesses and the structural facts
// that apply to the input's construction.
struct ClassificationReport {
  std::string input;
  std::string canonical;
  size_t size = 0;

  FiniteRing ring;
  std::optional<FiniteRing> trivext_base;   // set for trivial extensions
  std::optional<FiniteModule> trivext_module;

  size_t idempotent_count = 0;
  std::vector<Idx> idempotents_shown;  // capped at 32

  bool vnr = false;
  std::optional<Witness> vnr_witness;
  bool vnr_witness_verified = false;
  bool vnr_via_reduced = false;
  bool vnr_characterization = false;
  bool vnr_agree = true;

  std::vector<MethodReport> wvnr_methods;  // element first, then oracles, then structural
  bool wvnr = false;
  bool wvnr_agree = true;

  std::vector<std::string> structural_facts;
  bool poly_extension_wvnr = false;

  double elapsed_ms = 0.0;

  bool disagreement() const { return !vnr_agree || !wvnr_agree; }
};

struct ClassifyOptions {
  size_t ring_cap = kDefaultRingCap;
  size_t oracle_cap = kDefaultOracleCap;
  bool force_oracle = false;
  Exec exec = Exec::parallel;
};

// Parses, elaborates and classifies one DSL expression. Throws
// expr::ParseError / expr::ElabError on bad input.
ClassificationReport classify(const std::string& text, const ClassifyOptions& opts = {});

std::string report_to_text(const ClassificationReport& rep, bool with_timing);
nlohmann::ordered_json report_to_json(const ClassificationReport& rep, bool with_timing);

}  // namespace ringlab
