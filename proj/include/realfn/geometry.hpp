#pragma once

#include <array>
#include <string_view>

#include "realfn/config.hpp"
#include "realfn/mobius.hpp"
#include "realfn/rational_map.hpp"
#include "realfn/sphere_point.hpp"

namespace realfn {

/// The two antiholomorphic involutions of the sphere, up to conjugacy.
enum class Involution {
  Conj,       // [X:Z] -> [conj X : conj Z]; fixes the circle R u {inf}
  Antipodal,  // [X:Z] -> [-conj Z : conj X]; no fixed points
};

std::string_view to_string(Involution tau);
Involution involution_from_string(std::string_view name);

template <Scalar K>
SpherePoint<K> apply_involution(Involution tau, const SpherePoint<K>& p) {
  if (tau == Involution::Conj) return {conjugate(p.x()), conjugate(p.z())};
  return {-conjugate(p.z()), conjugate(p.x())};
}

/// The form whose zero divisor is tau(div F): coefficient conjugation, then
/// (X, Z) -> (-Z, X) for Antipodal. Applying it twice gives F (Conj) or
/// (-1)^d F (Antipodal).
template <Scalar K>
BinaryForm<K> transported(const BinaryForm<K>& f, Involution tau) {
  const BinaryForm<K> c = f.conjugated();
  if (tau == Involution::Conj) return c;
  return c.substituted(K(0), K(-1), K(1), K(0));
}

template <Scalar K>
SpherePoint<K> apply_mobius(const Mobius<K>& g, const SpherePoint<K>& p) {
  return g(p);
}

/// g o h
template <Scalar K>
Mobius<K> compose(const Mobius<K>& g, const Mobius<K>& h) {
  return g.compose(h);
}

template <Scalar K>
Mobius<K> inverse(const Mobius<K>& g) {
  return g.inverse();
}

/// The unique Mobius map with src[i] -> dst[i], via the cross-ratio normal
/// form sending a triple to (0, 1, inf). Float inputs must be pairwise
/// separated by more than 10 * tol in the chordal metric.
template <Scalar K>
Mobius<K> mobius_from_three_pairs(const std::array<SpherePoint<K>, 3>& src, const std::array<SpherePoint<K>, 3>& dst,
                                  const NumericConfig& cfg = {});

/// True iff (P1, Q1) and (P2, Q2) are proportional coefficient vectors
/// (float: residual below tol). Maps of different degree are never equal.
template <Scalar K>
bool maps_equal_up_to_scale(const RationalMap<K>& f1, const RationalMap<K>& f2, double tol = 1e-9);

/// Proportionality residual of the coefficient vectors: exactly 0 for
/// proportional exact maps, 1 for maps of different degree.
template <Scalar K>
double map_residual(const RationalMap<K>& f1, const RationalMap<K>& f2);

/// Residual of two Mobius maps being the same projective transformation.
template <Scalar K>
double mobius_residual(const Mobius<K>& g, const Mobius<K>& h);

}  // namespace realfn
