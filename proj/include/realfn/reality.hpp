#pragma once

#include <optional>

#include "realfn/config.hpp"
#include "realfn/divisor.hpp"
#include "realfn/geometry.hpp"
#include "realfn/mobius.hpp"
#include "realfn/rational_map.hpp"

namespace realfn {

enum class VerdictKind { Real, Pseudoreal, NotEquivalent };
enum class DescentClass { RealClass, PseudorealClass, Inconsistent };

std::string_view to_string(VerdictKind kind);

template <Scalar K>
struct DescentResult {
  DescentClass kind = DescentClass::Inconsistent;
  std::optional<Mobius<K>> g;
  /// G before normalization: conj(G) M = conj(c) G (real) or
  /// J conj(G) M = conj(c) G (pseudoreal), |c|^2 = |lambda|.
  std::optional<Mat2<K>> matrix;
  K c{0};
  std::optional<int> lambda_sign;
};

template <Scalar K>
struct CriterionResult {
  bool stable = true;
  StabilityWitness witness;
  Divisor sigma;
};

template <Scalar K>
struct Verdict {
  VerdictKind kind = VerdictKind::NotEquivalent;
  std::optional<Mobius<K>> g;
  double residual = 0.0;
  std::optional<int> lambda_sign;
  StabilityWitness witness;
  Divisor sigma;
};

/// F(p) = conj(f(tau p)) as a holomorphic map; same degree as f.
template <Scalar K>
RationalMap<K> conj_transport(const RationalMap<K>& f, Involution tau);

/// The matrix S with F = S f coefficient by coefficient (not only up to
/// scale), or none when F is not a Mobius image of f.
template <Scalar K>
std::optional<Mat2<K>> mobius_factor_matrix(const RationalMap<K>& f, const RationalMap<K>& big_f,
                                            const NumericConfig& cfg = {});

/// m with F = m o f up to scale, or none.
template <Scalar K>
std::optional<Mobius<K>> mobius_factor(const RationalMap<K>& f, const RationalMap<K>& big_f,
                                       const NumericConfig& cfg = {});

/// Solves conj(g) o m = g (real class) or conj(g) o m = J o g (pseudoreal
/// class) given conj(M) M = lambda I. The construction is the same for both
/// involutions; tau only labels the request. Exact mode needs a Gaussian
/// rational c with |c|^2 = |lambda|; the matrix returned by
/// mobius_factor_matrix always has |lambda| = 1.
template <Scalar K>
DescentResult<K> descent_solve(const Mat2<K>& m, Involution tau, const NumericConfig& cfg = {});
template <Scalar K>
DescentResult<K> descent_solve(const Mobius<K>& m, Involution tau, const NumericConfig& cfg = {}) {
  return descent_solve(m.matrix(), tau, cfg);
}

/// tau Sigma(f) = Sigma(f). Degrees 0 and 1 have empty Sigma and pass.
template <Scalar K>
CriterionResult<K> divisor_criterion(const RationalMap<K>& f, Involution tau, const NumericConfig& cfg = {});

/// Runs the divisor criterion and the transport/factor/descent chain, and
/// throws NumericalFailure when they disagree.
template <Scalar K>
Verdict<K> reality_test(const RationalMap<K>& f, Involution tau, const NumericConfig& cfg = {});

/// Residual of the defining identity for g o f; 0 for exact successes.
template <Scalar K>
double verify_verdict(const RationalMap<K>& f, Involution tau, const Verdict<K>& v);

}  // namespace realfn
