#include <doctest.h>

#include "helpers.hpp"
#include "realfn/generator.hpp"
#include "realfn/io.hpp"

using namespace realfn;
using namespace test;

namespace {

Json coeff(const char* re, const char* im) { return {{"re", re}, {"im", im}}; }

Json z3_minus_3iz(const char* mode) {
  return {{"numerator", {coeff("0", "0"), coeff("0", "-3"), coeff("0", "0"), coeff("1", "0")}},
          {"denominator", {coeff("1", "0")}},
          {"tau", "conj"},
          {"mode", mode}};
}

std::string error_of(const Json& j) {
  try {
    instance_from_json(j);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("coefficient strings") {
  CHECK(coefficient_to_json(gq(-3, 4, 1, 1)) == coeff("-3/4", "1"));
  CHECK(coefficient_from_json<GaussianRational>(coeff("0.25", "-2/6"), "c") == gq(1, 4, -1, 3));
  CHECK(coefficient_to_json(Complex(0.1, -2.0)) == coeff("0.10000000000000001", "-2"));
  CHECK(coefficient_from_json<Complex>(coeff("0.10000000000000001", "-2"), "c") == Complex(0.1, -2.0));
  CHECK_THROWS_AS(coefficient_from_json<Complex>(coeff("1/2", "0"), "c"), InvalidInput);
  CHECK_THROWS_AS(coefficient_from_json<Complex>(Json{{"re", 1}, {"im", "0"}}, "c"), InvalidInput);
}

TEST_CASE("instance parsing") {
  const Instance in = instance_from_json(z3_minus_3iz("exact"));
  CHECK(in.mode == Mode::Exact);
  CHECK(in.tau == Involution::Conj);
  CHECK(in.map<GaussianRational>({}).numerator() == QForm({gq(0), gq(0, -3), gq(0), gq(1)}));
  CHECK(in.map<Complex>({}).degree() == 3);

  SUBCASE("errors name the coefficient") {
    Json bad = z3_minus_3iz("float");
    bad["numerator"][2]["im"] = "1.5x";
    CHECK(error_of(bad).find("numerator[2]") != std::string::npos);
    bad = z3_minus_3iz("exact");
    bad["denominator"] = Json::array();
    CHECK(error_of(bad).find("denominator") != std::string::npos);
    bad = z3_minus_3iz("exact");
    bad["tau"] = "reflection";
    CHECK_FALSE(error_of(bad).empty());
    bad = z3_minus_3iz("exact");
    bad["numerator"] = {coeff("0", "0")};
    bad["denominator"] = {coeff("0", "0")};
    CHECK_FALSE(error_of(bad).empty());
    bad = z3_minus_3iz("exact");
    bad["tol"] = -1;
    CHECK_FALSE(error_of(bad).empty());
  }
}

TEST_CASE("property: serialization round trips") {
  Rng rng(12);
  SUBCASE("instances") {
    for (int i = 0; i < 20; ++i) {
      const int d = 1 + i % 5;
      Instance a = make_instance(random_map<GaussianRational>(rng, d, false), Involution::Antipodal);
      a.tol = 1e-10;
      a.seed = 9;
      const Json ja = instance_to_json(a);
      CHECK(instance_to_json(instance_from_json(ja)) == ja);
      const Instance b = make_instance(random_map<Complex>(rng, d, false), Involution::Conj);
      const Instance b2 = instance_from_json(instance_to_json(b));
      CHECK(b2.numerator_float == b.numerator_float);
      CHECK(b2.denominator_float == b.denominator_float);
    }
  }
  SUBCASE("verdicts") {
    for (int i = 0; i < 12; ++i) {
      const int d = 1 + i % 4;
      const auto tau = i % 2 ? Involution::Antipodal : Involution::Conj;
      const auto fq = i % 3 ? random_map<GaussianRational>(rng, d, false)
                            : scramble<GaussianRational>(i, 2, Involution::Conj, VerdictKind::Real).map;
      const auto vq = reality_test(fq, tau);
      const Json jq = verdict_to_json(vq);
      CHECK(verdict_to_json(verdict_from_json<GaussianRational>(jq)) == jq);

      const auto vf = reality_test(to_float(fq), tau, NumericConfig{});
      const Json jf = verdict_to_json(vf);
      const auto back = verdict_from_json<Complex>(jf);
      CHECK(back.kind == vf.kind);
      CHECK(back.residual == vf.residual);
      CHECK(back.lambda_sign == vf.lambda_sign);
      CHECK(divisor_to_json(back.sigma) == jf["sigma_divisor"]);
      CHECK(witness_to_json(back.witness) == jf["stability"]);
      if (vf.g) CHECK(mobius_residual(*back.g, *vf.g) < 1e-15);
      CHECK(jf.contains("g") == (vf.kind != VerdictKind::NotEquivalent));
    }
  }
  SUBCASE("constellations") {
    const Json z4 = {{"degree", 4}, {"sigma", {{{1, 2, 3, 4}}, {{1, 4, 3, 2}}}}};
    CHECK(constellation_to_json(constellation_from_json(z4)) == z4);
    const Json with_fixed = {{"degree", 3}, {"sigma", {{{1, 2}}, {{1, 3}}, {{1, 2, 3}}}}};
    CHECK(constellation_to_json(constellation_from_json(with_fixed)) == with_fixed);
    CHECK_THROWS_AS(constellation_from_json(Json{{"degree", 2}, {"sigma", {{{1, 3}}}}}), InvalidInput);
  }
}
