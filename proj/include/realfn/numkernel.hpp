#pragma once

#include <span>
#include <vector>

#include "realfn/binary_form.hpp"
#include "realfn/config.hpp"
#include "realfn/sphere_point.hpp"

namespace realfn {

template <Scalar K>
struct SquarefreeFactor {
  BinaryForm<K> factor;
  int exponent;
};

/// One projective root. In exact mode `approximate` marks roots that are not
/// Gaussian rational; `point` then holds the exact value of a double
/// approximation. Float-mode roots are always approximate.
template <Scalar K>
struct RootEntry {
  SpherePoint<K> point;
  int multiplicity;
  bool approximate;
};

template <Scalar K>
using RootList = std::vector<RootEntry<K>>;

/// Canonical scaling. Exact: Gaussian-integer coefficients with content 1 and
/// leading coefficient in {Re > 0, Im >= 0}. Float: the first coefficient of
/// maximal magnitude becomes exactly 1.
template <Scalar K>
BinaryForm<K> normalized(const BinaryForm<K>& f);

/// Greatest common divisor, normalized. Float mode returns the largest-degree
/// approximate common factor (Sylvester subresultant rank drop at cfg.tol).
template <Scalar K>
BinaryForm<K> gcd_forms(const BinaryForm<K>& a, const BinaryForm<K>& b, const NumericConfig& cfg = {});

/// a / b, where b is known to divide a (least squares in float mode).
template <Scalar K>
BinaryForm<K> divide_exactly(const BinaryForm<K>& a, const BinaryForm<K>& b);

/// Pairwise coprime square-free factors with strictly increasing exponents;
/// F is proportional to the product of factor^exponent. Empty for constants.
template <Scalar K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const BinaryForm<K>& f, const NumericConfig& cfg = {});

/// Product of the distinct irreducible factors of f (normalized).
template <Scalar K>
BinaryForm<K> squarefree_part(const BinaryForm<K>& f, const NumericConfig& cfg = {});

/// Homogeneous Sylvester resultant for the declared degrees.
template <Scalar K>
K resultant(const BinaryForm<K>& a, const BinaryForm<K>& b);

/// All projective roots of f; multiplicities sum to deg f.
template <Scalar K>
RootList<K> roots_with_multiplicities(const BinaryForm<K>& f, const NumericConfig& cfg = {});

/// P_X Q_Z - P_Z Q_X, of degree 2d - 2 for forms of degree d.
template <Scalar K>
BinaryForm<K> wronskian(const BinaryForm<K>& p, const BinaryForm<K>& q);

/// True when a = s * b for one nonzero scalar s (float: residual < tol).
template <Scalar K>
bool proportional(const BinaryForm<K>& a, const BinaryForm<K>& b, double tol = 1e-9);

/// Distance of the unit coefficient vectors of a and b from being parallel:
/// sqrt(1 - |<a,b>|^2) up to rounding. 0 for proportional inputs.
double proportionality_residual(std::span<const Complex> a, std::span<const Complex> b);

namespace detail {

/// Roots of sum_k p[k] x^k (nonzero top coefficient): companion-matrix
/// eigenvalues polished by Aberth-Ehrlich simultaneous iteration.
std::vector<Complex> polynomial_roots(std::span<const Complex> p);

/// Roots of a square-free float form, in the order they were found.
std::vector<SpherePoint<Complex>> simple_roots(const BinaryForm<Complex>& f);

}  // namespace detail

}  // namespace realfn
