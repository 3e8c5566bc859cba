#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "realfn/io.hpp"

namespace realfn {

enum ExitCode : int { kOk = 0, kSelfcheckFailure = 1, kInvalidInput = 2, kNumericalFailure = 3 };

struct CommandResult {
  int exit_code = kOk;
  Json output;        // report for stdout; null on error
  std::string error;  // message for stderr
};

/// Options given on the command line. Set fields override the instance file.
struct Overrides {
  std::optional<Involution> tau;
  std::optional<Mode> mode;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

/// Runs `body`, mapping InvalidInput (and malformed JSON) to exit 2 and
/// NumericalFailure to exit 3.
template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    return {kInvalidInput, nullptr, std::string("invalid input: ") + e.what()};
  } catch (const Json::exception& e) {
    return {kInvalidInput, nullptr, std::string("invalid input: ") + e.what()};
  } catch (const NumericalFailure& e) {
    return {kNumericalFailure, nullptr, std::string("numerical failure: ") + e.what()};
  }
}

/// Instance with the overrides applied.
Instance resolve_instance(const Json& instance, const Overrides& o);

/// VerdictFile for the instance.
CommandResult cmd_test(const Json& instance, const Overrides& o = {});

/// Scrambled instance plus "ground_truth": {"class", "h", "seed_map"}.
CommandResult cmd_scramble(std::uint64_t seed, int degree, Involution tau, VerdictKind cls, Mode mode);

/// `count` instances per involution, cycling through scrambled real,
/// scrambled pseudoreal (antipodal only; a generic map for conj) and
/// perturbed non-examples. Checks criterion <=> construction and the known
/// class on each; exact mode also compares against the float verdict.
CommandResult cmd_selfcheck(int count, int max_degree, std::uint64_t seed, Mode mode, double tol = 1e-9);

/// Critical values, Sigma(f) and its stability under tau.
CommandResult cmd_divisor(const Json& instance, const Overrides& o = {});

/// action: validate | genus | blocks | quotient. blocks and quotient read
/// "basepoint" (default 1) and "extra_words" from the constellation file;
/// validate also reports passport stability when "pairing" is present.
CommandResult cmd_monodromy(const Json& constellation, const std::string& action);

}  // namespace realfn
