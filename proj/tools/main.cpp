#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ringlab/common.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitCap = 4;

// Default cap, then RING_MAX_SIZE, then --max-size, strongest last.
int resolve_cap(const std::optional<size_t>& cli_cap, size_t& out) {
  out = ringlab::kDefaultRingCap;
  if (const char* env = std::getenv("RING_MAX_SIZE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      std::cerr << "error: RING_MAX_SIZE must be a positive integer, got \"" << env
                << "\"\n";
      return kExitInput;
    }
    out = static_cast<size_t>(v);
  }
  if (cli_cap) out = *cli_cap;
  return kExitOk;
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite commutative ring classifier and regularity verifier"};
  app.require_subcommand(1);

  std::string expr_text;
  std::string family_name;
  bool json = false;
  bool no_timing = false;
  bool force_oracle = false;
  bool serial = false;
  std::optional<size_t> max_size;
  std::optional<int64_t> max_n;

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify one ring expression");
  classify_cmd->add_option("expr", expr_text, "ring expression, e.g. \"Z/12\"")
      ->required();
  classify_cmd->add_flag("--json", json, "emit a JSON report");
  classify_cmd->add_option("--max-size", max_size, "realized ring size cap");
  classify_cmd->add_flag("--oracle", force_oracle,
                         "run the ideal-lattice oracles regardless of size");
  classify_cmd->add_flag("--no-timing", no_timing, "omit timing fields");
  classify_cmd->add_flag("--serial", serial, "disable parallel kernels");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "replay one theorem family (or all) over generated corpora");
  verify_cmd
      ->add_option("family", family_name,
                   "zmod | products | polyquot | trivialext | proxy-polynomial | "
                   "th1-equivalence | all")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "largest Z/n modulus swept");
  verify_cmd->add_option("--max-size", max_size,
                         "size bound for products, quotients and extensions");
  verify_cmd->add_flag("--json", json, "emit a JSON report");
  verify_cmd->add_flag("--no-timing", no_timing, "omit timing fields");
  verify_cmd->add_flag("--serial", serial, "disable parallel kernels");

  CLI::App* idem_cmd =
      app.add_subcommand("idempotents", "list the idempotents of a ring expression");
  idem_cmd->add_option("expr", expr_text, "ring expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (classify_cmd->parsed()) {
      ringlab::ClassifyOptions opts;
      if (int rc = resolve_cap(max_size, opts.ring_cap); rc != kExitOk) return rc;
      opts.force_oracle = force_oracle;
      opts.exec = serial ? ringlab::Exec::serial : ringlab::Exec::parallel;

      ringlab::ClassificationReport rep = ringlab::classify(expr_text, opts);
      if (json)
        print_json(ringlab::report_to_json(rep, !no_timing));
      else
        std::cout << ringlab::report_to_text(rep, !no_timing);
      return rep.disagreement() ? kExitDisagreement : kExitOk;
    }

    if (verify_cmd->parsed()) {
      auto family = ringlab::family_from_name(family_name);
      if (!family) {
        std::cerr << "error: unknown family \"" << family_name
                  << "\" (expected zmod, products, polyquot, trivialext, "
                     "proxy-polynomial, th1-equivalence, or all)\n";
        return kExitInput;
      }
      ringlab::VerifyBounds bounds;
      if (int rc = resolve_cap(std::nullopt, bounds.ring_cap); rc != kExitOk) return rc;
      if (max_n) {
        bounds.zmod_max_n = *max_n;
        bounds.zmod_oracle_max_n =
            std::min<int64_t>(*max_n, static_cast<int64_t>(bounds.oracle_cap));
      }
      if (max_size) {
        bounds.product_max_size = *max_size;
        bounds.polyquot_max_size = *max_size;
        bounds.trivext_max_size = *max_size;
        bounds.proxy_base_max_size = std::min<size_t>(*max_size, 64);
      }
      bounds.exec = serial ? ringlab::Exec::serial : ringlab::Exec::parallel;

      auto results = ringlab::run_verify(*family, bounds);
      if (json)
        print_json(ringlab::verify_to_json(results, !no_timing));
      else
        std::cout << ringlab::verify_to_text(results, !no_timing);
      for (const auto& r : results)
        if (r.failures > 0) return kExitDisagreement;
      return kExitOk;
    }

    if (idem_cmd->parsed()) {
      size_t cap = 0;
      if (int rc = resolve_cap(std::nullopt, cap); rc != kExitOk) return rc;
      ringlab::FiniteRing r = ringlab::expr::elaborate_text(expr_text, cap);
      const auto& idem = r.structure().idempotents;
      for (size_t i = 0; i < idem.size(); ++i) {
        if (i) std::cout << " ";
        std::cout << r.format(idem[i]);
      }
      std::cout << "\n";
      return kExitOk;
    }
  } catch (const ringlab::expr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ringlab::expr::ElabError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ringlab::OracleCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ringlab::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ringlab::RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
