#pragma once

#include <cmath>
#include <limits>
#include <tuple>

#include "realfn/errors.hpp"
#include "realfn/scalar.hpp"

namespace realfn {

/// A point [X:Z] of the Riemann sphere.
///
/// Representatives are canonical, so equality is structural:
///  - exact: [w:1] for finite points, [1:0] for infinity;
///  - float: unit Euclidean norm with Z real and nonnegative (X real and
///    positive when Z = 0); |Z| <= 4 eps |X| is rounded to Z = 0.
template <Scalar K>
class SpherePoint {
 public:
  SpherePoint() : x_(0), z_(1) {}
  SpherePoint(K x, K z) : x_(std::move(x)), z_(std::move(z)) { normalize(); }

  static SpherePoint finite(K w) { return SpherePoint(std::move(w), K(1)); }
  static SpherePoint infinity() { return SpherePoint(K(1), K(0)); }

  const K& x() const { return x_; }
  const K& z() const { return z_; }
  bool is_infinity() const { return realfn::is_zero(z_); }
  /// X/Z; only meaningful for finite points.
  K affine() const { return x_ / z_; }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) { return a.x_ == b.x_ && a.z_ == b.z_; }

 private:
  void normalize() {
    if (realfn::is_zero(x_) && realfn::is_zero(z_)) throw InvalidInput("[0:0] is not a point of the sphere");
    if constexpr (is_exact_v<K>) {
      if (realfn::is_zero(z_)) {
        x_ = K(1);
      } else {
        x_ /= z_;
        z_ = K(1);
      }
    } else {
      // Z within rounding of zero is infinity; keeps the phase rule stable.
      if (std::abs(z_) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x_)) z_ = K(0);
      const double n = std::hypot(std::abs(x_), std::abs(z_));
      const bool canonical_phase = z_.imag() == 0.0 && (z_.real() > 0.0 || (z_.real() == 0.0 && x_.imag() == 0.0 &&
                                                                            x_.real() > 0.0));
      // Already canonical up to rounding: keep the bits, so parsing is idempotent.
      if (canonical_phase && std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return;
      Complex phase = std::abs(z_) > 0 ? std::abs(z_) / z_ : std::abs(x_) / x_;
      x_ *= phase / n;
      z_ = Complex(std::abs(z_) / n, 0.0);
    }
  }

  K x_;
  K z_;
};

inline SpherePoint<Complex> to_float(const SpherePoint<GaussianRational>& p) {
  return {p.x().to_complex(), p.z().to_complex()};
}
inline SpherePoint<Complex> to_float(const SpherePoint<Complex>& p) { return p; }

/// Chordal distance 2|X_p Z_q - X_q Z_p| / (|p||q|). Antipodes are at 2.
inline double chordal_distance(const SpherePoint<Complex>& p, const SpherePoint<Complex>& q) {
  const double np = std::hypot(std::abs(p.x()), std::abs(p.z()));
  const double nq = std::hypot(std::abs(q.x()), std::abs(q.z()));
  return 2.0 * std::abs(p.x() * q.z() - q.x() * p.z()) / (np * nq);
}

/// Fixed total order on float representatives: decreasing Re X, then Im X,
/// then Z. Infinity ([1:0]) sorts first.
inline bool canonical_less(const SpherePoint<Complex>& a, const SpherePoint<Complex>& b) {
  return std::make_tuple(-a.x().real(), -a.x().imag(), -a.z().real()) <
         std::make_tuple(-b.x().real(), -b.x().imag(), -b.z().real());
}

}  // namespace realfn
