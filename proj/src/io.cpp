#include "realfn/io.hpp"

#include <cmath>
#include <fstream>

namespace realfn {

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

Mode mode_from_string(std::string_view name) {
  if (name == "exact") return Mode::Exact;
  if (name == "float") return Mode::Float;
  throw InvalidInput("unknown mode '" + std::string(name) + "' (expected exact or float)");
}

Json coefficient_to_json(const GaussianRational& c) {
  return {{"re", format_rational(c.re())}, {"im", format_rational(c.im())}};
}

Json coefficient_to_json(const Complex& c) {
  return {{"re", format_double(c.real())}, {"im", format_double(c.imag())}};
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw InvalidInput(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InvalidInput(where + "." + key + ": expected an integer");
  return v.get<int>();
}

template <Scalar K>
std::vector<K> coefficient_array(const Json& j, const char* key) {
  const Json& arr = field(j, key, "instance");
  if (!arr.is_array() || arr.empty()) throw InvalidInput(std::string(key) + ": expected a nonempty array");
  std::vector<K> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(coefficient_from_json<K>(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <Scalar K>
bool all_zero(const std::vector<K>& v) {
  for (const K& c : v) {
    if (!is_zero(c)) return false;
  }
  return true;
}

template <Scalar K>
Json coefficient_list(const std::vector<K>& v) {
  Json out = Json::array();
  for (const K& c : v) out.push_back(coefficient_to_json(c));
  return out;
}

}  // namespace

template <>
GaussianRational coefficient_from_json<GaussianRational>(const Json& j, const std::string& where) {
  try {
    return {parse_rational(string_field(j, "re", where)), parse_rational(string_field(j, "im", where))};
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

template <>
Complex coefficient_from_json<Complex>(const Json& j, const std::string& where) {
  try {
    return {parse_double(string_field(j, "re", where)), parse_double(string_field(j, "im", where))};
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

NumericConfig Instance::config(const NumericConfig& defaults) const {
  NumericConfig cfg = defaults;
  if (tol) cfg.tol = *tol;
  if (seed) cfg.seed = *seed;
  return cfg;
}

template <>
RationalMap<GaussianRational> Instance::map<GaussianRational>(const NumericConfig& cfg) const {
  if (mode != Mode::Exact) throw InvalidInput("instance is not in exact mode");
  return RationalMap<GaussianRational>::from_coefficients(numerator_exact, denominator_exact, cfg);
}

template <>
RationalMap<Complex> Instance::map<Complex>(const NumericConfig& cfg) const {
  if (mode == Mode::Float) return RationalMap<Complex>::from_coefficients(numerator_float, denominator_float, cfg);
  return to_float(map<GaussianRational>(cfg));
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("instance: expected a JSON object");
  Instance in;
  in.mode = mode_from_string(string_field(j, "mode", "instance"));
  in.tau = involution_from_string(string_field(j, "tau", "instance"));
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0)) throw InvalidInput("tol: expected a positive number");
    in.tol = j["tol"].get<double>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw InvalidInput("seed: expected a nonnegative integer");
    in.seed = j["seed"].get<std::uint64_t>();
  }
  bool zero = false;
  if (in.mode == Mode::Exact) {
    in.numerator_exact = coefficient_array<GaussianRational>(j, "numerator");
    in.denominator_exact = coefficient_array<GaussianRational>(j, "denominator");
    zero = all_zero(in.numerator_exact) && all_zero(in.denominator_exact);
  } else {
    in.numerator_float = coefficient_array<Complex>(j, "numerator");
    in.denominator_float = coefficient_array<Complex>(j, "denominator");
    for (const auto* v : {&in.numerator_float, &in.denominator_float}) {
      for (const Complex& c : *v) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InvalidInput("non-finite coefficient");
      }
    }
    zero = all_zero(in.numerator_float) && all_zero(in.denominator_float);
  }
  if (zero) throw InvalidInput("numerator and denominator are both zero");
  return in;
}

Json instance_to_json(const Instance& in) {
  Json j;
  if (in.mode == Mode::Exact) {
    j["numerator"] = coefficient_list(in.numerator_exact);
    j["denominator"] = coefficient_list(in.denominator_exact);
  } else {
    j["numerator"] = coefficient_list(in.numerator_float);
    j["denominator"] = coefficient_list(in.denominator_float);
  }
  j["tau"] = std::string(to_string(in.tau));
  j["mode"] = std::string(to_string(in.mode));
  if (in.tol) j["tol"] = *in.tol;
  if (in.seed) j["seed"] = *in.seed;
  return j;
}

template <Scalar K>
Instance make_instance(const RationalMap<K>& f, Involution tau) {
  Instance in;
  in.tau = tau;
  std::vector<K> p(f.numerator().coeffs().begin(), f.numerator().coeffs().end());
  std::vector<K> q(f.denominator().coeffs().begin(), f.denominator().coeffs().end());
  if constexpr (is_exact_v<K>) {
    in.mode = Mode::Exact;
    in.numerator_exact = std::move(p);
    in.denominator_exact = std::move(q);
  } else {
    in.mode = Mode::Float;
    in.numerator_float = std::move(p);
    in.denominator_float = std::move(q);
  }
  return in;
}

Json point_to_json(const SpherePoint<Complex>& p) {
  return {{"X", coefficient_to_json(p.x())}, {"Z", coefficient_to_json(p.z())}};
}

SpherePoint<Complex> point_from_json(const Json& j) {
  return {coefficient_from_json<Complex>(field(j, "X", "point"), "point.X"),
          coefficient_from_json<Complex>(field(j, "Z", "point"), "point.Z")};
}

Json divisor_to_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& e : d.entries()) out.push_back({{"point", point_to_json(e.point)}, {"multiplicity", e.multiplicity}});
  return out;
}

Divisor divisor_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("divisor: expected an array");
  std::vector<DivisorEntry> entries;
  for (const auto& e : j) {
    entries.push_back({point_from_json(field(e, "point", "divisor")), int_field(e, "multiplicity", "divisor")});
  }
  return Divisor(std::move(entries));
}

Json witness_to_json(const StabilityWitness& w) {
  if (w.stable) return {{"stable", true}, {"matching", w.matching}};
  Json failure = {{"index", *w.failure}};
  if (w.failure_entry) {
    failure["point"] = point_to_json(w.failure_entry->point);
    failure["multiplicity"] = w.failure_entry->multiplicity;
  }
  return {{"stable", false}, {"failure", failure}};
}

StabilityWitness witness_from_json(const Json& j) {
  StabilityWitness w;
  const Json& stable = field(j, "stable", "stability");
  if (!stable.is_boolean()) throw InvalidInput("stability.stable: expected a boolean");
  w.stable = stable.get<bool>();
  if (w.stable) {
    w.matching = field(j, "matching", "stability").get<std::vector<int>>();
    return w;
  }
  const Json& f = field(j, "failure", "stability");
  w.failure = int_field(f, "index", "stability.failure");
  if (f.contains("point")) {
    w.failure_entry = DivisorEntry{point_from_json(f["point"]), int_field(f, "multiplicity", "stability.failure")};
  }
  return w;
}

template <Scalar K>
Json matrix_to_json(const Mat2<K>& m) {
  return Json::array({Json::array({coefficient_to_json(m.a), coefficient_to_json(m.b)}),
                      Json::array({coefficient_to_json(m.c), coefficient_to_json(m.d)})});
}

template <Scalar K>
Mat2<K> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2) {
    throw InvalidInput("g: expected a 2x2 array");
  }
  return {coefficient_from_json<K>(j[0][0], "g[0][0]"), coefficient_from_json<K>(j[0][1], "g[0][1]"),
          coefficient_from_json<K>(j[1][0], "g[1][0]"), coefficient_from_json<K>(j[1][1], "g[1][1]")};
}

template <Scalar K>
Json verdict_to_json(const Verdict<K>& v) {
  Json j;
  j["verdict"] = std::string(to_string(v.kind));
  if (v.g) j["g"] = matrix_to_json(v.g->matrix());
  j["residual"] = v.residual;
  j["sigma_divisor"] = divisor_to_json(v.sigma);
  j["stability"] = witness_to_json(v.witness);
  j["lambda_sign"] = v.lambda_sign ? Json(*v.lambda_sign) : Json(nullptr);
  return j;
}

template <Scalar K>
Verdict<K> verdict_from_json(const Json& j) {
  Verdict<K> v;
  const std::string kind = string_field(j, "verdict", "verdict");
  if (kind == "real") {
    v.kind = VerdictKind::Real;
  } else if (kind == "pseudoreal") {
    v.kind = VerdictKind::Pseudoreal;
  } else if (kind == "not_equivalent") {
    v.kind = VerdictKind::NotEquivalent;
  } else {
    throw InvalidInput("unknown verdict '" + kind + "'");
  }
  if (j.contains("g") != (v.kind != VerdictKind::NotEquivalent)) {
    throw InvalidInput("\"g\" must be present exactly for real and pseudoreal verdicts");
  }
  // Re-normalizing a normalized float matrix may move the last bit.
  if (j.contains("g")) v.g = Mobius<K>(matrix_from_json<K>(j["g"]), 0.0);
  const Json& r = field(j, "residual", "verdict");
  if (!r.is_number()) throw InvalidInput("residual: expected a number");
  v.residual = r.get<double>();
  v.sigma = divisor_from_json(field(j, "sigma_divisor", "verdict"));
  v.witness = witness_from_json(field(j, "stability", "verdict"));
  const Json& s = field(j, "lambda_sign", "verdict");
  if (!s.is_null()) v.lambda_sign = s.get<int>();
  return v;
}

Constellation constellation_from_json(const Json& j) {
  Constellation c;
  c.degree = int_field(j, "degree", "constellation");
  if (c.degree < 1) throw InvalidInput("constellation.degree: must be positive");
  const Json& sigma = field(j, "sigma", "constellation");
  if (!sigma.is_array()) throw InvalidInput("constellation.sigma: expected an array of permutations");
  for (const auto& perm : sigma) {
    std::vector<std::vector<int>> cycles;
    try {
      cycles = perm.get<std::vector<std::vector<int>>>();
    } catch (const Json::exception&) {
      throw InvalidInput("constellation.sigma: each permutation is a list of cycles of integers");
    }
    for (auto& cycle : cycles) {
      for (int& x : cycle) --x;
    }
    c.sigma.push_back(from_cycles(c.degree, cycles));
  }
  return c;
}

Json constellation_to_json(const Constellation& c) {
  Json sigma = Json::array();
  for (const auto& p : c.sigma) {
    auto cycles = to_cycles(p);
    for (auto& cycle : cycles) {
      for (int& x : cycle) ++x;
    }
    sigma.push_back(cycles);
  }
  return {{"degree", c.degree}, {"sigma", sigma}};
}

Json block_system_to_json(const BlockSystem& b) {
  auto blocks = b.blocks;
  for (auto& blk : blocks) {
    for (int& x : blk) ++x;
  }
  return blocks;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

template Instance make_instance(const RationalMap<GaussianRational>&, Involution);
template Instance make_instance(const RationalMap<Complex>&, Involution);
template Json matrix_to_json(const Mat2<GaussianRational>&);
template Json matrix_to_json(const Mat2<Complex>&);
template Mat2<GaussianRational> matrix_from_json(const Json&);
template Mat2<Complex> matrix_from_json(const Json&);
template Json verdict_to_json(const Verdict<GaussianRational>&);
template Json verdict_to_json(const Verdict<Complex>&);
template Verdict<GaussianRational> verdict_from_json(const Json&);
template Verdict<Complex> verdict_from_json(const Json&);

}  // namespace realfn
