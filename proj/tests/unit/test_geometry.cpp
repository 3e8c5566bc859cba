#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "realfn/geometry.hpp"

using namespace realfn;
using namespace test;

using QPoint = SpherePoint<GaussianRational>;
using QMobius = Mobius<GaussianRational>;
using FMobius = Mobius<Complex>;

TEST_CASE("chordal distance examples") {
  CHECK(chordal_distance(fpoint(0.0), fpoint(0.0)) == doctest::Approx(0.0));
  CHECK(chordal_distance(fpoint(0.0), fpoint(1.0, 0.0)) == doctest::Approx(2.0));
  // 1 and -1 are antipodal on the unit sphere
  CHECK(chordal_distance(fpoint(1.0), fpoint(-1.0)) == doctest::Approx(2.0));
  CHECK(chordal_distance(fpoint({0, 1}), fpoint({0, -1})) == doctest::Approx(2.0));
}

TEST_CASE("sphere point representatives are canonical") {
  CHECK(QPoint(gq(2), gq(4)) == QPoint::finite(gq(1, 2, 0, 1)));
  CHECK(QPoint(gq(0, 3), gq(0)) == QPoint::infinity());
  CHECK(fpoint({0, 2}, {0, 2}) == fpoint(1.0, 1.0));
  CHECK_THROWS_AS(QPoint(gq(0), gq(0)), InvalidInput);
}

TEST_CASE("involution examples") {
  // conj fixes real points and infinity
  CHECK(apply_involution(Involution::Conj, QPoint::finite(gq(3))) == QPoint::finite(gq(3)));
  CHECK(apply_involution(Involution::Conj, QPoint::finite(gq(1, 2))) == QPoint::finite(gq(1, -2)));
  CHECK(apply_involution(Involution::Conj, QPoint::infinity()) == QPoint::infinity());
  // antipodal: w -> -1/conj(w)
  CHECK(apply_involution(Involution::Antipodal, QPoint::finite(gq(0))) == QPoint::infinity());
  CHECK(apply_involution(Involution::Antipodal, QPoint::infinity()) == QPoint::finite(gq(0)));
  CHECK(apply_involution(Involution::Antipodal, QPoint::finite(gq(1))) == QPoint::finite(gq(-1)));
  // i -> -1/(-i) = -i
  CHECK(apply_involution(Involution::Antipodal, QPoint::finite(gq(0, 1))) == QPoint::finite(gq(0, -1)));

  CHECK(involution_from_string("conj") == Involution::Conj);
  CHECK(involution_from_string("antipodal") == Involution::Antipodal);
  CHECK_THROWS_AS(involution_from_string("real"), InvalidInput);
}

TEST_CASE("property: involutions square to the identity and antipodal has no fixed point") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = fpoint(random_complex(rng) * 4.0);
    for (auto tau : {Involution::Conj, Involution::Antipodal}) {
      CHECK(chordal_distance(apply_involution(tau, apply_involution(tau, p)), p) < 1e-14);
    }
    // The antipode is at chordal distance exactly 2.
    CHECK(chordal_distance(apply_involution(Involution::Antipodal, p), p) == doctest::Approx(2.0));
  }
}

TEST_CASE("mobius examples") {
  const QMobius j = QMobius::negative_inverse();
  CHECK(j(QPoint::finite(gq(1))) == QPoint::finite(gq(-1)));
  CHECK(j(QPoint::finite(gq(0))) == QPoint::infinity());

  const QMobius t(Mat2<GaussianRational>{gq(1), gq(1), gq(0), gq(1)});
  CHECK(inverse(t) == QMobius(Mat2<GaussianRational>{gq(1), gq(-1), gq(0), gq(1)}));
  CHECK(compose(t, inverse(t)) == QMobius::identity());
  // (z + 1) o (-1/z) = (z - 1)/z
  CHECK(compose(t, j)(QPoint::finite(gq(2))) == QPoint::finite(gq(1, 2, 0, 1)));

  // Scaling the matrix does not change the map.
  CHECK(QMobius(Mat2<GaussianRational>{gq(2, 2), gq(0), gq(4), gq(0, 6)}) ==
        QMobius(Mat2<GaussianRational>{gq(1), gq(0), gq(1, -1), gq(3, 2, 3, 2)}));
  CHECK_THROWS_AS(QMobius(Mat2<GaussianRational>{gq(1), gq(2), gq(2), gq(4)}), InvalidInput);
  CHECK_THROWS_AS(FMobius(Mat2<Complex>{1.0, 2.0, 2.0, 4.0}), InvalidInput);

  const FMobius f(Mat2<Complex>{Complex(0, 2), 1.0, 3.0, Complex(1, 1)});
  const FMobius g(Mat2<Complex>{Complex(0, -4), -2.0, -6.0, Complex(-2, -2)});
  CHECK(mobius_residual(f, g) < 1e-15);
}

TEST_CASE("mobius_from_three_pairs examples") {
  // (0, 1, inf) -> (1, 0, inf) is z -> 1 - z
  const std::array<QPoint, 3> src{QPoint::finite(gq(0)), QPoint::finite(gq(1)), QPoint::infinity()};
  const std::array<QPoint, 3> dst{QPoint::finite(gq(1)), QPoint::finite(gq(0)), QPoint::infinity()};
  const QMobius g = mobius_from_three_pairs(src, dst);
  CHECK(g == QMobius(Mat2<GaussianRational>{gq(-1), gq(1), gq(0), gq(1)}));
  CHECK(mobius_residual(g, QMobius(Mat2<GaussianRational>{gq(-1), gq(1), gq(0), gq(1)})) == 0.0);

  const std::array<QPoint, 3> repeated{QPoint::finite(gq(0)), QPoint::finite(gq(0)), QPoint::infinity()};
  CHECK_THROWS_AS(mobius_from_three_pairs(repeated, dst), InvalidInput);
  CHECK_THROWS_AS(mobius_from_three_pairs(src, repeated), InvalidInput);
}

TEST_CASE("property: three-pair interpolation reproduces a random Mobius map") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Mat2<Complex> m{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    if (std::abs(m.det()) < 0.1) continue;
    const FMobius h(m);
    std::array<SpherePoint<Complex>, 3> src{fpoint(random_complex(rng)), fpoint(random_complex(rng) + 2.0),
                                           fpoint(1.0, 0.0)};
    std::array<SpherePoint<Complex>, 3> dst{h(src[0]), h(src[1]), h(src[2])};
    const FMobius g = mobius_from_three_pairs(src, dst);
    CHECK(mobius_residual(g, h) < 1e-10);
    const auto p = fpoint(random_complex(rng));
    CHECK(chordal_distance(g(p), h(p)) < 1e-10);
    CHECK(mobius_residual(compose(g, inverse(g)), FMobius::identity()) < 1e-14);
  }
}

TEST_CASE("maps_equal_up_to_scale examples") {
  using QMap = RationalMap<GaussianRational>;
  using FMap = RationalMap<Complex>;
  const QMap z2 = QMap::from_coefficients({gq(0), gq(0), gq(1)}, {gq(1)});
  const QMap z2_scaled = QMap::from_coefficients({gq(0), gq(0), gq(3, 1)}, {gq(3, 1)});
  const QMap z2_plus_1 = QMap::from_coefficients({gq(1), gq(0), gq(1)}, {gq(1)});
  CHECK(maps_equal_up_to_scale(z2, z2_scaled));
  CHECK_FALSE(maps_equal_up_to_scale(z2, z2_plus_1));
  CHECK(map_residual(z2, z2_scaled) == 0.0);
  CHECK(map_residual(z2, z2_plus_1) > 0.0);
  CHECK(map_residual(z2, QMap::from_coefficients({gq(0), gq(1)}, {gq(1)})) == 1.0);

  const NumericConfig cfg;
  const FMap f = FMap::from_coefficients({0.5, 1.0, Complex(0, 2)}, {1.0, -1.0, 0.25}, cfg);
  const FMap f_scaled = FMap::from_coefficients({Complex(0, 0.5), Complex(0, 1), -2.0},
                                                {Complex(0, 1), Complex(0, -1), Complex(0, 0.25)}, cfg);
  CHECK(maps_equal_up_to_scale(f, f_scaled, cfg.tol));
  const FMap perturbed =
      FMap::from_coefficients({0.5 + 100 * cfg.tol, 1.0, Complex(0, 2)}, {1.0, -1.0, 0.25}, cfg);
  CHECK_FALSE(maps_equal_up_to_scale(f, perturbed, cfg.tol));
}

TEST_CASE("rational maps drop common factors and pad degrees") {
  using QMap = RationalMap<GaussianRational>;
  // (z^2 - 1) / (z - 1) = z + 1
  const QMap f = QMap::from_coefficients({gq(-1), gq(0), gq(1)}, {gq(-1), gq(1)});
  CHECK(f.degree() == 1);
  CHECK(maps_equal_up_to_scale(f, QMap::from_coefficients({gq(1), gq(1)}, {gq(1)})));
  // z^2 / 1 keeps degree 2 with Q = Z^2
  const QMap g = QMap::from_coefficients({gq(0), gq(0), gq(1)}, {gq(1)});
  CHECK(g.degree() == 2);
  CHECK(g(QPoint::infinity()) == QPoint::infinity());
  CHECK_THROWS_AS(QMap::from_coefficients({gq(0)}, {gq(0)}), InvalidInput);
}
