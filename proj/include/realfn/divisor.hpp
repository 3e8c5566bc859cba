#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realfn/binary_form.hpp"
#include "realfn/config.hpp"
#include "realfn/geometry.hpp"
#include "realfn/rational_map.hpp"
#include "realfn/sphere_point.hpp"

namespace realfn {

struct DivisorEntry {
  SpherePoint<Complex> point;
  int multiplicity;
};

/// Finite sum of sphere points with positive multiplicities. Points are held
/// as float representatives in both modes (exact supports may be algebraic).
/// Entries are kept in canonical order, so equal divisors compare equal
/// entry by entry.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<DivisorEntry> entries);

  const std::vector<DivisorEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const DivisorEntry& operator[](std::size_t i) const { return entries_[i]; }
  int degree() const;

  /// Disjoint union; the supports must not overlap.
  Divisor operator+(const Divisor& other) const;

 private:
  std::vector<DivisorEntry> entries_;
};

/// Result of comparing D with tau(D). `matching[i] = j` pairs entry i with
/// the entry j at its tau-image. On failure `failure` is the entry whose image
/// has no partner of equal multiplicity.
struct StabilityWitness {
  bool stable = true;
  std::vector<int> matching;
  std::optional<int> failure;
  std::optional<DivisorEntry> failure_entry;
};

/// Zero divisor of beta P - alpha Q for v = [alpha : beta]; degree deg f.
template <Scalar K>
Divisor preimage_divisor(const RationalMap<K>& f, const SpherePoint<K>& v, const NumericConfig& cfg = {});

/// Distinct critical values in canonical order; empty for degree 1.
template <Scalar K>
std::vector<SpherePoint<Complex>> critical_values(const RationalMap<K>& f, const NumericConfig& cfg = {});

/// Sigma(f). With SigmaReading::FullPreimage, the sum of the fibers over the
/// critical values; with CriticalPointsOnly, sum of ord_p p over critical p.
template <Scalar K>
Divisor sigma_divisor(const RationalMap<K>& f, const NumericConfig& cfg = {});

StabilityWitness is_tau_stable(const Divisor& d, Involution tau, const NumericConfig& cfg = {});

/// V(alpha, beta) = Res_{X,Z}(beta P - alpha Q, W), of degree 2d - 2. Its
/// zeros are the critical values, each with the number of critical points
/// (with Wronskian multiplicity) above it.
BinaryForm<GaussianRational> critical_value_form(const RationalMap<GaussianRational>& f);

/// A form whose zero divisor is Sigma(f). FullPreimage: sqfree(V)(P, Q).
/// CriticalPointsOnly: W * sqfree(W). Degree-1 maps give the constant 1.
BinaryForm<GaussianRational> sigma_form_exact(const RationalMap<GaussianRational>& f, const NumericConfig& cfg = {});

/// G(P, Q) = sum_k g_k P^k Q^(m-k).
template <Scalar K>
BinaryForm<K> composed(const BinaryForm<K>& g, const BinaryForm<K>& p, const BinaryForm<K>& q);

/// Sigma(f) is tau-stable iff T is proportional to its transport.
bool sigma_form_stable(const BinaryForm<GaussianRational>& t, Involution tau);

/// Float divisor of an exact form, from its exact roots.
Divisor divisor_of(const BinaryForm<GaussianRational>& t);

}  // namespace realfn
