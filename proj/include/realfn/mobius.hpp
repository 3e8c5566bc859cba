#pragma once

#include <cmath>

#include "realfn/errors.hpp"
#include "realfn/scalar.hpp"
#include "realfn/sphere_point.hpp"

namespace realfn {

/// Plain 2x2 matrix (a b; c d). No normalization, so matrix identities
/// can be checked exactly.
template <Scalar K>
struct Mat2 {
  K a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {K(1), K(0), K(0), K(1)}; }
  /// w -> -1/w
  static Mat2 negative_inverse() { return {K(0), K(-1), K(1), K(0)}; }

  K det() const { return a * d - b * c; }
  K trace() const { return a + d; }
  Mat2 conj() const { return {conjugate(a), conjugate(b), conjugate(c), conjugate(d)}; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 scaled(const K& s) const { return {a * s, b * s, c * s, d * s}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend Mat2 operator+(const Mat2& l, const Mat2& r) { return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d}; }
  friend bool operator==(const Mat2& l, const Mat2& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
};

/// An element of Aut(sphere): [X:Z] -> [aX + bZ : cX + dZ], up to scale.
///
/// Stored in canonical form. Exact: the first nonzero entry (row-major) is 1.
/// Float: Frobenius norm 1, and the first entry of magnitude at least 1e-3
/// times the largest is real and positive.
template <Scalar K>
class Mobius {
 public:
  Mobius() : m_(Mat2<K>::identity()) { normalize(); }
  explicit Mobius(const Mat2<K>& m, double tol = 1e-9) : m_(m) {
    if constexpr (is_exact_v<K>) {
      if (m_.det().is_zero()) throw InvalidInput("singular Mobius matrix");
    } else {
      const double biggest = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
      if (!(std::abs(m_.det()) > tol * biggest * biggest)) throw InvalidInput("singular Mobius matrix");
    }
    normalize();
  }

  static Mobius identity() { return Mobius(); }
  static Mobius negative_inverse() { return Mobius(Mat2<K>::negative_inverse()); }

  const Mat2<K>& matrix() const { return m_; }

  SpherePoint<K> operator()(const SpherePoint<K>& p) const {
    return {m_.a * p.x() + m_.b * p.z(), m_.c * p.x() + m_.d * p.z()};
  }

  /// (*this) o h
  Mobius compose(const Mobius& h) const { return Mobius(m_ * h.m_, 0.0); }
  Mobius inverse() const { return Mobius(m_.adjugate(), 0.0); }

  friend bool operator==(const Mobius& l, const Mobius& r) { return l.m_ == r.m_; }

 private:
  void normalize() {
    if constexpr (is_exact_v<K>) {
      K first = !m_.a.is_zero() ? m_.a : (!m_.b.is_zero() ? m_.b : m_.c);
      m_ = m_.scaled(K(1) / first);
    } else {
      const double norm = std::sqrt(std::norm(m_.a) + std::norm(m_.b) + std::norm(m_.c) + std::norm(m_.d));
      const double biggest = std::max({std::abs(m_.a), std::abs(m_.b), std::abs(m_.c), std::abs(m_.d)});
      Complex pivot = m_.d;
      for (const Complex& e : {m_.a, m_.b, m_.c}) {
        if (std::abs(e) >= 1e-3 * biggest) {
          pivot = e;
          break;
        }
      }
      m_ = m_.scaled(std::abs(pivot) / (pivot * norm));
    }
  }

  Mat2<K> m_;
};

inline Mat2<Complex> to_float(const Mat2<GaussianRational>& m) {
  return {m.a.to_complex(), m.b.to_complex(), m.c.to_complex(), m.d.to_complex()};
}
inline Mobius<Complex> to_float(const Mobius<GaussianRational>& g) { return Mobius<Complex>(to_float(g.matrix()), 0.0); }
inline Mobius<Complex> to_float(const Mobius<Complex>& g) { return g; }

}  // namespace realfn
