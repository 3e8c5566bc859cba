#pragma once

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace realfn {

using Complex = std::complex<double>;

/// An element of Q(i), stored as two canonical GMP rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  explicit GaussianRational(mpq_class re) : GaussianRational(std::move(re), mpq_class(0)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  /// Exact conversion of a double-precision complex number.
  static GaussianRational from_complex(Complex z);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// The two coefficient fields. Mixed arithmetic between them does not compile.
template <class K>
concept Scalar = std::same_as<K, GaussianRational> || std::same_as<K, Complex>;

template <Scalar K>
inline constexpr bool is_exact_v = std::same_as<K, GaussianRational>;

inline GaussianRational conjugate(const GaussianRational& z) { return z.conj(); }
inline Complex conjugate(const Complex& z) { return std::conj(z); }

/// Structural zero test; for doubles this is exact comparison with 0.
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }

inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

template <Scalar K>
K imag_unit() {
  if constexpr (is_exact_v<K>) {
    return GaussianRational::i();
  } else {
    return Complex(0.0, 1.0);
  }
}

/// Parses "a/b", an integer, or a plain decimal ("-1.25", "3e-2") exactly.
mpq_class parse_rational(std::string_view text);
/// Canonical "a/b" (or "a" when the denominator is 1).
std::string format_rational(const mpq_class& q);

/// Parses a decimal string, rejecting trailing garbage.
double parse_double(std::string_view text);
/// 17 significant digits, so that parse_double(format_double(x)) == x.
std::string format_double(double x);

}  // namespace realfn
