#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "realfn/config.hpp"
#include "realfn/divisor.hpp"
#include "realfn/geometry.hpp"
#include "realfn/monodromy.hpp"
#include "realfn/reality.hpp"

namespace realfn {

using Json = nlohmann::json;

enum class Mode { Exact, Float };
std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);

/// Coefficient object {"re": string, "im": string}: "a/b" rationals in exact
/// mode, 17-digit decimals in float mode.
Json coefficient_to_json(const GaussianRational& c);
Json coefficient_to_json(const Complex& c);
template <Scalar K>
K coefficient_from_json(const Json& j, const std::string& where);

/// Coefficients of the instance, low powers of z first, in both fields.
/// Exactly one of the two pairs is filled, according to `mode`.
struct Instance {
  Mode mode = Mode::Float;
  Involution tau = Involution::Conj;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::vector<GaussianRational> numerator_exact, denominator_exact;
  std::vector<Complex> numerator_float, denominator_float;

  NumericConfig config(const NumericConfig& defaults) const;
  template <Scalar K>
  RationalMap<K> map(const NumericConfig& cfg) const;
};

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& in);
template <Scalar K>
Instance make_instance(const RationalMap<K>& f, Involution tau);

Json point_to_json(const SpherePoint<Complex>& p);
SpherePoint<Complex> point_from_json(const Json& j);

Json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const Json& j);

Json witness_to_json(const StabilityWitness& w);
StabilityWitness witness_from_json(const Json& j);

template <Scalar K>
Json matrix_to_json(const Mat2<K>& m);
template <Scalar K>
Mat2<K> matrix_from_json(const Json& j);

template <Scalar K>
Json verdict_to_json(const Verdict<K>& v);
template <Scalar K>
Verdict<K> verdict_from_json(const Json& j);

/// {"degree": n, "sigma": [[cycle, ...], ...]} with 1-indexed cycles; optional
/// "basepoint" (1-indexed), "extra_words", "pairing" (1-indexed) for the
/// monodromy command.
Constellation constellation_from_json(const Json& j);
Json constellation_to_json(const Constellation& c);
Json block_system_to_json(const BlockSystem& b);

/// Reads a JSON file; InvalidInput on I/O or parse errors.
Json read_json_file(const std::string& path);

}  // namespace realfn
