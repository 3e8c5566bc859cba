#include "realfn/commands.hpp"

#include <algorithm>

#include "realfn/generator.hpp"

namespace realfn {

Instance resolve_instance(const Json& instance, const Overrides& o) {
  Instance in = instance_from_json(instance);
  if (o.tau) in.tau = *o.tau;
  if (o.tol) in.tol = *o.tol;
  if (o.seed) in.seed = *o.seed;
  if (o.mode && *o.mode != in.mode) {
    if (*o.mode == Mode::Exact) throw InvalidInput("a float instance cannot be run in exact mode");
    // Exact coefficients evaluated in floating point.
    const RationalMap<Complex> f = in.map<Complex>(in.config({}));
    in.mode = Mode::Float;
    in.numerator_float.assign(f.numerator().coeffs().begin(), f.numerator().coeffs().end());
    in.denominator_float.assign(f.denominator().coeffs().begin(), f.denominator().coeffs().end());
  }
  return in;
}

namespace {

template <Scalar K>
Json test_report(const Instance& in) {
  const NumericConfig cfg = in.config({});
  return verdict_to_json(reality_test(in.map<K>(cfg), in.tau, cfg));
}

template <Scalar K>
Json divisor_report(const Instance& in) {
  const NumericConfig cfg = in.config({});
  const RationalMap<K> f = in.map<K>(cfg);
  Json j;
  j["degree"] = f.degree();
  j["tau"] = std::string(to_string(in.tau));
  Json values = Json::array();
  if (f.degree() > 0) {
    j["wronskian_degree"] = wronskian(f).degree();
    for (const auto& v : critical_values(f, cfg)) values.push_back(point_to_json(v));
  }
  j["critical_values"] = values;
  const Divisor sigma = f.degree() > 0 ? sigma_divisor(f, cfg) : Divisor();
  j["sigma_divisor"] = divisor_to_json(sigma);
  j["stability"] = witness_to_json(is_tau_stable(sigma, in.tau, cfg));
  return j;
}

const char* class_name(VerdictKind k) { return k == VerdictKind::Real ? "real" : "pseudoreal"; }

struct CheckOutcome {
  bool pass = true;
  std::string reason;
  double residual = 0.0;
};

// Criterion and construction run independently of reality_test so that a
// disagreement is reported rather than thrown.
template <Scalar K>
std::pair<bool, std::optional<VerdictKind>> both_paths(const RationalMap<K>& f, Involution tau,
                                                       const NumericConfig& cfg) {
  const bool stable = divisor_criterion(f, tau, cfg).stable;
  std::optional<VerdictKind> built;
  if (f.degree() == 0) {
    built = VerdictKind::Real;
  } else if (const auto s = mobius_factor_matrix(f, conj_transport(f, tau), cfg)) {
    const DescentResult<K> d = descent_solve(*s, tau, cfg);
    if (d.kind == DescentClass::RealClass) built = VerdictKind::Real;
    if (d.kind == DescentClass::PseudorealClass) built = VerdictKind::Pseudoreal;
  }
  return {stable, built};
}

template <Scalar K>
CheckOutcome check_instance(const RationalMap<K>& f, Involution tau, std::optional<VerdictKind> expected,
                            const NumericConfig& cfg) {
  CheckOutcome out;
  try {
    const auto [stable, built] = both_paths(f, tau, cfg);
    if (stable != built.has_value()) {
      return {false, stable ? "criterion stable, no construction" : "construction without stable criterion", 0.0};
    }
    const VerdictKind kind = built.value_or(VerdictKind::NotEquivalent);
    if (tau == Involution::Conj && kind == VerdictKind::Pseudoreal) return {false, "pseudoreal class under conj", 0.0};
    if (expected && kind != *expected) {
      return {false, "expected " + std::string(to_string(*expected)) + ", got " + std::string(to_string(kind)), 0.0};
    }
    const Verdict<K> v = reality_test(f, tau, cfg);
    out.residual = v.residual;
    if (v.kind != VerdictKind::NotEquivalent && !(v.residual < 1e-8)) {
      return {false, "residual " + format_double(v.residual), v.residual};
    }
    if constexpr (is_exact_v<K>) {
      const VerdictKind float_kind = reality_test(to_float(f), tau, cfg).kind;
      if (float_kind != kind) {
        return {false, "float verdict " + std::string(to_string(float_kind)) + " differs from exact", out.residual};
      }
    }
  } catch (const NumericalFailure& e) {
    return {false, std::string("numerical failure: ") + e.what(), 0.0};
  }
  return out;
}

template <Scalar K>
Json selfcheck_tau(int count, int max_degree, std::uint64_t seed, Involution tau, double tol, int& failed,
                   double& max_residual) {
  NumericConfig cfg;
  cfg.tol = tol;
  cfg.seed = seed;
  Json rows = Json::array();
  int passed = 0;
  const std::uint64_t tau_salt = tau == Involution::Conj ? 0x9e3779b97f4a7c15ULL : 0xc2b2ae3d27d4eb4fULL;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed ^ tau_salt ^ (static_cast<std::uint64_t>(i) * 0xbf58476d1ce4e5b9ULL));
    int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
    const std::uint64_t instance_seed = rng();
    std::string kind;
    std::optional<VerdictKind> expected;
    std::optional<RationalMap<K>> f;
    switch (i % 3) {
      case 0: {
        // Antipodal real seeds need even degree.
        if (tau == Involution::Antipodal && d % 2) d = d < max_degree ? d + 1 : d - 1;
        if (d < 1) d = 2;
        kind = "scrambled_real";
        expected = VerdictKind::Real;
        f = scramble<K>(instance_seed, d, tau, VerdictKind::Real).map;
        break;
      }
      case 1: {
        if (tau == Involution::Antipodal) {
          if (d % 2 == 0) d -= 1;
          kind = "scrambled_pseudoreal";
          expected = VerdictKind::Pseudoreal;
          f = scramble<K>(instance_seed, d, tau, VerdictKind::Pseudoreal).map;
        } else {
          kind = "generic";
          Rng r(instance_seed);
          f = random_map<K>(r, d, false);
        }
        break;
      }
      default: {
        kind = "perturbed";
        if (tau == Involution::Antipodal && d % 2) d = d < max_degree ? d + 1 : d - 1;
        if (d < 1) d = 2;
        if constexpr (is_exact_v<K>) {
          // Noise on Gaussian-rational coefficients is a generic map.
          Rng r(instance_seed);
          f = random_map<K>(r, d, false);
        } else {
          Rng r(instance_seed);
          f = perturbed(scramble<K>(instance_seed, d, tau, VerdictKind::Real).map, 1e-3, r);
        }
        if (d >= 2) expected = VerdictKind::NotEquivalent;
        break;
      }
    }
    const CheckOutcome c = check_instance(*f, tau, expected, cfg);
    max_residual = std::max(max_residual, c.residual);
    if (c.pass) {
      ++passed;
    } else {
      ++failed;
      rows.push_back({{"index", i}, {"degree", d}, {"kind", kind}, {"reason", c.reason}});
    }
  }
  return {{"instances", count}, {"passed", passed}, {"failures", rows}};
}

}  // namespace

CommandResult cmd_test(const Json& instance, const Overrides& o) {
  return guarded([&]() -> CommandResult {
    const Instance in = resolve_instance(instance, o);
    return {kOk, in.mode == Mode::Exact ? test_report<GaussianRational>(in) : test_report<Complex>(in), {}};
  });
}

CommandResult cmd_scramble(std::uint64_t seed, int degree, Involution tau, VerdictKind cls, Mode mode) {
  return guarded([&]() -> CommandResult {
    auto emit = [&](const auto& s) {
      Json j = instance_to_json(make_instance(s.map, tau));
      Json seed_map = instance_to_json(make_instance(s.seed_map, tau));
      j["ground_truth"] = {{"class", class_name(cls)},
                           {"h", matrix_to_json(s.h)},
                           {"seed_map", {{"numerator", seed_map["numerator"]}, {"denominator", seed_map["denominator"]}}}};
      return j;
    };
    if (mode == Mode::Exact) return {kOk, emit(scramble<GaussianRational>(seed, degree, tau, cls)), {}};
    return {kOk, emit(scramble<Complex>(seed, degree, tau, cls)), {}};
  });
}

CommandResult cmd_selfcheck(int count, int max_degree, std::uint64_t seed, Mode mode, double tol) {
  return guarded([&]() -> CommandResult {
    if (count < 1) throw InvalidInput("count must be at least 1");
    if (max_degree < 1) throw InvalidInput("max degree must be at least 1");
    int failed = 0;
    double max_residual = 0.0;
    Json by_tau;
    for (Involution tau : {Involution::Conj, Involution::Antipodal}) {
      by_tau[std::string(to_string(tau))] =
          mode == Mode::Exact ? selfcheck_tau<GaussianRational>(count, max_degree, seed, tau, tol, failed, max_residual)
                              : selfcheck_tau<Complex>(count, max_degree, seed, tau, tol, failed, max_residual);
    }
    Json j = {{"mode", std::string(to_string(mode))},
              {"seed", seed},
              {"max_degree", max_degree},
              {"results", by_tau},
              {"total", 2 * count},
              {"passed", 2 * count - failed},
              {"failed", failed},
              {"max_residual", max_residual}};
    return {failed ? kSelfcheckFailure : kOk, j, failed ? std::to_string(failed) + " self-check failures" : ""};
  });
}

CommandResult cmd_divisor(const Json& instance, const Overrides& o) {
  return guarded([&]() -> CommandResult {
    const Instance in = resolve_instance(instance, o);
    return {kOk, in.mode == Mode::Exact ? divisor_report<GaussianRational>(in) : divisor_report<Complex>(in), {}};
  });
}

CommandResult cmd_monodromy(const Json& constellation, const std::string& action) {
  return guarded([&]() -> CommandResult {
    const Constellation c = constellation_from_json(constellation);
    validate(c);
    Json j = {{"degree", c.degree}};
    if (action == "validate") {
      j["valid"] = true;
      j["passport"] = passport(c);
      if (constellation.contains("pairing")) {
        auto pairing = constellation["pairing"].get<std::vector<int>>();
        for (int& x : pairing) --x;
        j["passport_stable"] = passport_stability(c, pairing);
      }
    } else if (action == "genus") {
      j["genus"] = genus(c);
    } else if (action == "blocks" || action == "quotient") {
      const int basepoint = constellation.value("basepoint", 1) - 1;
      const auto words = constellation.value("extra_words", std::vector<Word>{});
      const BlockSystem b = block_closure(c, basepoint, words);
      j["blocks"] = block_system_to_json(b);
      j["block_size"] = b.block_size();
      if (action == "quotient") {
        const Constellation q = quotient_constellation(c, b);
        j["quotient"] = constellation_to_json(q);
        j["quotient_genus"] = genus(q);
      }
    } else {
      throw InvalidInput("unknown monodromy action '" + action + "'");
    }
    return {kOk, j, {}};
  });
}

}  // namespace realfn
