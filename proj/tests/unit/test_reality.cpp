#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "realfn/reality.hpp"

using namespace realfn;
using namespace test;

namespace {

using QMap = RationalMap<GaussianRational>;
using FMap = RationalMap<Complex>;
using QMat = Mat2<GaussianRational>;

QMap qmap(std::vector<GaussianRational> num, std::vector<GaussianRational> den = {gq(1)}) {
  return QMap::from_coefficients(std::move(num), std::move(den));
}
FMap fmap(const QMap& f) { return FMap::from_coprime(to_f(f.numerator()), to_f(f.denominator())); }

QMap identity_map() { return qmap({gq(0), gq(1)}); }
QMap z3_minus_3z() { return qmap({gq(0), gq(-3), gq(0), gq(1)}); }
QMap z3_minus_3iz() { return qmap({gq(0), gq(0, -3), gq(0), gq(1)}); }
QMap iz2() { return qmap({gq(0), gq(0), gq(0, 1)}); }

bool real_coefficients_up_to_scale(const RationalMap<GaussianRational>& h) {
  const QForm joint(h.coefficient_vector());
  for (const auto& c : normalized(joint).coeffs()) {
    if (!c.is_real()) return false;
  }
  return true;
}

FMap random_map(std::mt19937_64& rng, int d, bool real) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> p, q;
  for (int k = 0; k <= d; ++k) {
    p.push_back(real ? Complex(u(rng)) : random_complex(rng));
    q.push_back(real ? Complex(u(rng)) : random_complex(rng));
  }
  return FMap::from_coefficients(p, q);
}

Mat2<Complex> random_mobius(std::mt19937_64& rng) {
  while (true) {
    Mat2<Complex> h{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    if (std::abs(h.det()) > 0.1) return h;
  }
}

}  // namespace

TEST_CASE("conj_transport examples") {
  const QMap f = z3_minus_3z();
  CHECK(maps_equal_up_to_scale(conj_transport(f, Involution::Conj), f));
  CHECK(maps_equal_up_to_scale(conj_transport(iz2(), Involution::Conj), qmap({gq(0), gq(0), gq(0, -1)})));
  // z -> -1/z, i.e. (-Z, X)
  const QMap t = conj_transport(identity_map(), Involution::Antipodal);
  CHECK(t.numerator() == qform({-1, 0}));
  CHECK(t.denominator() == qform({0, 1}));

  SUBCASE("transport is an involution on maps") {
    for (const QMap& g : {z3_minus_3iz(), iz2(), qmap({gq(1, 2), gq(0, 1)}, {gq(3), gq(2, -1), gq(1)})}) {
      for (auto tau : {Involution::Conj, Involution::Antipodal}) {
        CHECK(maps_equal_up_to_scale(conj_transport(conj_transport(g, tau), tau), g));
      }
    }
  }
}

TEST_CASE("mobius_factor examples") {
  const QMap f = qmap({gq(0), gq(0), gq(1)});
  CHECK(*mobius_factor(f, f) == Mobius<GaussianRational>::identity());
  // (z^2, z^2 + 1) -> w + 1
  const auto m = mobius_factor(f, qmap({gq(1), gq(0), gq(1)}));
  REQUIRE(m.has_value());
  CHECK(*m == Mobius<GaussianRational>(QMat{gq(1), gq(1), gq(0), gq(1)}));
  CHECK_FALSE(mobius_factor(f, qmap({gq(0), gq(0), gq(0), gq(1)})).has_value());
  CHECK_FALSE(mobius_factor(z3_minus_3z(), z3_minus_3iz()).has_value());

  SUBCASE("round trip on random degree-4 maps") {
    std::mt19937_64 rng(4);
    const NumericConfig cfg;
    for (int i = 0; i < 30; ++i) {
      const FMap g = random_map(rng, 4, false);
      const Mat2<Complex> h = random_mobius(rng);
      const auto found = mobius_factor(g, g.post_composed(h), cfg);
      REQUIRE(found.has_value());
      CHECK(mobius_residual(*found, Mobius<Complex>(h)) < 1e-9);
    }
  }
}

TEST_CASE("descent_solve examples") {
  const NumericConfig cfg;
  const auto id = descent_solve(QMat::identity(), Involution::Conj);
  CHECK(id.kind == DescentClass::RealClass);
  CHECK(id.lambda_sign == 1);
  CHECK(*id.g == Mobius<GaussianRational>::identity());

  const auto j = descent_solve(QMat::negative_inverse(), Involution::Antipodal);
  CHECK(j.kind == DescentClass::PseudorealClass);
  CHECK(j.lambda_sign == -1);
  CHECK(*j.g == Mobius<GaussianRational>::identity());

  CHECK(descent_solve(QMat{gq(1), gq(1), gq(0), gq(1)}, Involution::Conj).kind == DescentClass::Inconsistent);
  CHECK(descent_solve(Mat2<Complex>{1.0, 1.0, 0.0, 1.0}, Involution::Conj, cfg).kind == DescentClass::Inconsistent);

  SUBCASE("descent identities hold exactly for the constructed matrix") {
    // conj(M) M = 5 I and conj(M) M = -2 I
    const QMat real_m{gq(1, 2), gq(0), gq(0), gq(1, -2)};
    const auto r = descent_solve(real_m, Involution::Conj);
    REQUIRE(r.kind == DescentClass::RealClass);
    CHECK(r.matrix->conj() * real_m == r.matrix->scaled(conjugate(r.c)));

    const QMat pseudo_m{gq(0), gq(1, 1), gq(-1, -1), gq(0)};
    const auto p = descent_solve(pseudo_m, Involution::Antipodal);
    REQUIRE(p.kind == DescentClass::PseudorealClass);
    CHECK(p.lambda_sign == -1);
    CHECK(QMat::negative_inverse() * p.matrix->conj() * pseudo_m == p.matrix->scaled(conjugate(p.c)));
  }
  SUBCASE("lambda without a Gaussian-rational square root") {
    CHECK_THROWS_AS(descent_solve(QMat{gq(0), gq(1), gq(3), gq(0)}, Involution::Conj),
                    NumericalFailure);
  }
}

TEST_CASE("divisor_criterion examples") {
  const NumericConfig cfg;
  CHECK(divisor_criterion(z3_minus_3z(), Involution::Conj).stable);
  CHECK(divisor_criterion(fmap(z3_minus_3z()), Involution::Conj, cfg).stable);
  const auto bad = divisor_criterion(z3_minus_3iz(), Involution::Conj);
  CHECK_FALSE(bad.stable);
  CHECK(bad.witness.failure_entry->multiplicity == 2);
  CHECK_FALSE(divisor_criterion(fmap(z3_minus_3iz()), Involution::Conj, cfg).stable);
  CHECK(divisor_criterion(identity_map(), Involution::Antipodal).stable);
  CHECK(divisor_criterion(fmap(identity_map()), Involution::Antipodal, cfg).stable);
}

TEST_CASE("reality_test examples") {
  const NumericConfig cfg;
  SUBCASE("z^3 - 3z under conj is real with g = identity") {
    const auto v = reality_test(z3_minus_3z(), Involution::Conj);
    CHECK(v.kind == VerdictKind::Real);
    CHECK(*v.g == Mobius<GaussianRational>::identity());
    CHECK(v.residual == 0.0);
    const auto fv = reality_test(fmap(z3_minus_3z()), Involution::Conj, cfg);
    CHECK(fv.kind == VerdictKind::Real);
    CHECK(mobius_residual(*fv.g, Mobius<Complex>::identity()) < 1e-12);
  }
  SUBCASE("i z^2 under conj is real and g o f has real coefficients") {
    const auto v = reality_test(iz2(), Involution::Conj);
    CHECK(v.kind == VerdictKind::Real);
    CHECK(v.residual == 0.0);
    CHECK(real_coefficients_up_to_scale(iz2().post_composed(*v.g)));
    // The documented certificate w -> -i w also works.
    Verdict<GaussianRational> alt = v;
    alt.g = Mobius<GaussianRational>(QMat{gq(0, -1), gq(0), gq(0), gq(1)});
    CHECK(verify_verdict(iz2(), Involution::Conj, alt) == 0.0);
    CHECK(reality_test(fmap(iz2()), Involution::Conj, cfg).residual < 1e-12);
  }
  SUBCASE("z under antipodal is pseudoreal with g = identity") {
    const auto v = reality_test(identity_map(), Involution::Antipodal);
    CHECK(v.kind == VerdictKind::Pseudoreal);
    CHECK(*v.g == Mobius<GaussianRational>::identity());
    CHECK(v.lambda_sign == -1);
    CHECK(reality_test(fmap(identity_map()), Involution::Antipodal, cfg).kind == VerdictKind::Pseudoreal);
  }
  SUBCASE("z^3 - 3iz under conj is not equivalent") {
    const auto v = reality_test(z3_minus_3iz(), Involution::Conj);
    CHECK(v.kind == VerdictKind::NotEquivalent);
    CHECK_FALSE(v.g.has_value());
    CHECK(reality_test(fmap(z3_minus_3iz()), Involution::Conj, cfg).kind == VerdictKind::NotEquivalent);
  }
  SUBCASE("constant maps are real") {
    for (const QMap& c : {qmap({gq(2, 1)}), QMap::from_coefficients({gq(1)}, {gq(0)})}) {
      const auto v = reality_test(c, Involution::Antipodal);
      CHECK(v.kind == VerdictKind::Real);
      CHECK(v.residual == 0.0);
      CHECK(c(SpherePoint<GaussianRational>::finite(gq(5))) != SpherePoint<GaussianRational>::finite(gq(0)));
      CHECK((*v.g)(c(SpherePoint<GaussianRational>::finite(gq(5)))) == SpherePoint<GaussianRational>::finite(gq(0)));
    }
  }
}

TEST_CASE("property: criterion agrees with construction and the class is invariant under post-composition") {
  std::mt19937_64 rng(77);
  const NumericConfig cfg;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 5;
    const auto tau = trial % 2 ? Involution::Antipodal : Involution::Conj;
    FMap f = random_map(rng, d, false);
    if (trial % 3 == 0 && tau == Involution::Conj) f = random_map(rng, d, true);
    if (trial % 3 == 0 && tau == Involution::Antipodal) {
      f = FMap::from_coprime(f.numerator(), transported(f.numerator(), tau));
    }
    const auto v = reality_test(f, tau, cfg);
    CHECK(divisor_criterion(f, tau, cfg).stable == (v.kind != VerdictKind::NotEquivalent));
    if (tau == Involution::Conj) CHECK(v.kind != VerdictKind::Pseudoreal);
    if (d == 1) CHECK(v.kind != VerdictKind::NotEquivalent);
    if (v.kind != VerdictKind::NotEquivalent) {
      CHECK(v.residual < 1e-8);
      // sign(lambda) is +1 for conj and (-1)^d for the antipodal map
      CHECK(*v.lambda_sign == (tau == Involution::Antipodal && d % 2 ? -1 : 1));
    }
    const auto scrambled = reality_test(f.post_composed(random_mobius(rng)), tau, cfg);
    CHECK(scrambled.kind == v.kind);
  }
}
