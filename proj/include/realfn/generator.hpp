#pragma once

#include <cstdint>
#include <random>

#include "realfn/geometry.hpp"
#include "realfn/rational_map.hpp"
#include "realfn/reality.hpp"

namespace realfn {

using Rng = std::mt19937_64;

/// Random map of exact degree d, redrawn until no common factor cancels.
/// Float: coefficients uniform in [-1, 1] (real or complex parts). Exact:
/// Gaussian integers with parts in [-5, 5].
template <Scalar K>
RationalMap<K> random_map(Rng& rng, int d, bool real_coefficients);

/// Float: entries with parts uniform in [-1, 1] and |det| > 0.1. Exact:
/// Gaussian integers with parts in [-3, 3] and nonzero determinant.
template <Scalar K>
Mat2<K> random_mobius(Rng& rng);

/// (a, -conj b; b, conj a) with (a, b) != 0; commutes with the antipodal map.
template <Scalar K>
Mat2<K> random_antipodal_symmetry(Rng& rng);

/// f = P / T(P) with T the transport of P; conj f(tau p) = c / f(p).
template <Scalar K>
RationalMap<K> transport_pair(Rng& rng, int d, Involution tau);

template <Scalar K>
struct Scrambled {
  RationalMap<K> seed_map;
  Mat2<K> h;
  RationalMap<K> map;  // h o seed_map
  VerdictKind expected;
};

/// A seed map of the requested class, post-composed with a random Mobius h.
/// Real: random real-coefficient map (Conj) or P / T(P) with d even
/// (Antipodal). Pseudoreal: g0 o z^d, needs Antipodal and odd d. Throws
/// InvalidInput on other parameters. Deterministic in `seed`.
template <Scalar K>
Scrambled<K> scramble(std::uint64_t seed, int degree, Involution tau, VerdictKind cls);

/// Adds noise * max|coefficient| * (uniform in the square [-1,1]^2) to every
/// coefficient.
RationalMap<Complex> perturbed(const RationalMap<Complex>& f, double noise, Rng& rng);

}  // namespace realfn
