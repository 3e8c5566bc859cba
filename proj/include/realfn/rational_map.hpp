#pragma once

#include <vector>

#include "realfn/binary_form.hpp"
#include "realfn/config.hpp"
#include "realfn/mobius.hpp"
#include "realfn/numkernel.hpp"

namespace realfn {

/// A holomorphic map of the sphere, f = [P : Q] with coprime forms of one
/// degree d. Degree 0 is a constant map.
template <Scalar K>
class RationalMap {
 public:
  /// Brings p and q to a common degree (multiplying the lower one by a power
  /// of Z) and removes their common factor.
  RationalMap(BinaryForm<K> p, BinaryForm<K> q, const NumericConfig& cfg = {});

  /// From numerator/denominator coefficients in ascending powers of z.
  static RationalMap from_coefficients(std::vector<K> numerator, std::vector<K> denominator,
                                       const NumericConfig& cfg = {}) {
    return RationalMap(BinaryForm<K>(std::move(numerator)), BinaryForm<K>(std::move(denominator)), cfg);
  }
  /// Forms already known to be coprime and of equal degree.
  static RationalMap from_coprime(BinaryForm<K> p, BinaryForm<K> q) {
    RationalMap f;
    f.p_ = std::move(p);
    f.q_ = std::move(q);
    if (f.p_.degree() != f.q_.degree()) throw InvalidInput("numerator and denominator degrees differ");
    return f;
  }

  const BinaryForm<K>& numerator() const { return p_; }
  const BinaryForm<K>& denominator() const { return q_; }
  int degree() const { return p_.degree(); }

  SpherePoint<K> operator()(const SpherePoint<K>& pt) const {
    return {p_.eval(pt.x(), pt.z()), q_.eval(pt.x(), pt.z())};
  }

  /// g o f.
  RationalMap post_composed(const Mat2<K>& g) const {
    return from_coprime(p_.scaled(g.a) + q_.scaled(g.b), p_.scaled(g.c) + q_.scaled(g.d));
  }
  RationalMap post_composed(const Mobius<K>& g) const { return post_composed(g.matrix()); }

  /// Coefficients of P followed by those of Q.
  std::vector<K> coefficient_vector() const {
    std::vector<K> v(p_.coeffs().begin(), p_.coeffs().end());
    v.insert(v.end(), q_.coeffs().begin(), q_.coeffs().end());
    return v;
  }

 private:
  RationalMap() = default;

  BinaryForm<K> p_;
  BinaryForm<K> q_;
};

/// Critical-point form of f; errors on constant maps.
template <Scalar K>
BinaryForm<K> wronskian(const RationalMap<K>& f) {
  if (f.degree() == 0) throw InvalidInput("the Wronskian of a constant map is undefined");
  return wronskian(f.numerator(), f.denominator());
}

inline RationalMap<Complex> to_float(const RationalMap<GaussianRational>& f) {
  // Scale P and Q jointly so their largest coefficient has magnitude 1.
  BinaryForm<GaussianRational> joint(f.coefficient_vector());
  BinaryForm<Complex> scaled = to_float(joint);
  const int n = f.degree() + 1;
  std::vector<Complex> p(scaled.coeffs().begin(), scaled.coeffs().begin() + n);
  std::vector<Complex> q(scaled.coeffs().begin() + n, scaled.coeffs().end());
  return RationalMap<Complex>::from_coprime(BinaryForm<Complex>(std::move(p)), BinaryForm<Complex>(std::move(q)));
}
inline RationalMap<Complex> to_float(const RationalMap<Complex>& f) { return f; }

}  // namespace realfn
