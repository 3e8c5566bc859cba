#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "realfn/errors.hpp"
#include "realfn/scalar.hpp"

namespace realfn {

/// Homogeneous polynomial sum_k c_k X^k Z^(d-k) of declared degree d.
///
/// The declared degree is part of the value: X (degree 1) and XZ (degree 2)
/// are different forms, the second having a root at infinity [1:0].
template <Scalar K>
class BinaryForm {
 public:
  /// The zero form of degree 0.
  BinaryForm() : coeffs_(1, K(0)) {}
  explicit BinaryForm(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("binary form needs at least one coefficient");
  }

  static BinaryForm zero(int degree) { return BinaryForm(std::vector<K>(checked(degree) + 1, K(0))); }
  static BinaryForm constant(K c) { return BinaryForm(std::vector<K>{std::move(c)}); }
  /// c * X^k Z^(degree-k)
  static BinaryForm monomial(int degree, int k, K c = K(1)) {
    if (k < 0 || k > degree) throw InvalidInput("monomial index out of range");
    BinaryForm f = zero(degree);
    f.coeffs_[k] = std::move(c);
    return f;
  }
  /// a X + b Z
  static BinaryForm linear(K a, K b) { return BinaryForm(std::vector<K>{std::move(b), std::move(a)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const K& operator[](int k) const { return coeffs_[k]; }
  K& operator[](int k) { return coeffs_[k]; }
  std::span<const K> coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const K& c) { return realfn::is_zero(c); });
  }

  /// Number of leading (X-heavy) coefficients that are structurally zero,
  /// i.e. the order of the root at [1:0]. Undefined for the zero form.
  int multiplicity_at_infinity() const {
    int m = 0;
    for (int k = degree(); k >= 0 && realfn::is_zero(coeffs_[k]); --k) ++m;
    return m;
  }
  /// Order of the root at [0:1].
  int multiplicity_at_zero() const {
    int m = 0;
    for (int k = 0; k <= degree() && realfn::is_zero(coeffs_[k]); ++k) ++m;
    return m;
  }

  K eval(const K& x, const K& z) const {
    K r = coeffs_.back();
    K zp(1);
    for (int k = degree() - 1; k >= 0; --k) {
      zp *= z;
      r = r * x + coeffs_[k] * zp;
    }
    return r;
  }

  /// dF/dX, a form of degree d-1 (degree-0 forms differentiate to zero of degree 0).
  BinaryForm diff_x() const {
    if (degree() == 0) return BinaryForm();
    std::vector<K> out(degree());
    for (int k = 1; k <= degree(); ++k) out[k - 1] = coeffs_[k] * K(k);
    return BinaryForm(std::move(out));
  }
  /// dF/dZ
  BinaryForm diff_z() const {
    if (degree() == 0) return BinaryForm();
    std::vector<K> out(degree());
    for (int k = 0; k < degree(); ++k) out[k] = coeffs_[k] * K(degree() - k);
    return BinaryForm(std::move(out));
  }

  /// Entrywise complex conjugation of the coefficients.
  BinaryForm conjugated() const {
    std::vector<K> out;
    out.reserve(coeffs_.size());
    for (const K& c : coeffs_) out.push_back(conjugate(c));
    return BinaryForm(std::move(out));
  }

  /// F(aX + bZ, cX + dZ).
  BinaryForm substituted(const K& a, const K& b, const K& c, const K& d) const {
    const int n = degree();
    const BinaryForm l1 = linear(a, b);
    const BinaryForm l2 = linear(c, d);
    std::vector<BinaryForm> p1{constant(K(1))}, p2{constant(K(1))};
    for (int k = 1; k <= n; ++k) {
      p1.push_back(p1.back() * l1);
      p2.push_back(p2.back() * l2);
    }
    BinaryForm out = zero(n);
    for (int k = 0; k <= n; ++k) {
      if (realfn::is_zero(coeffs_[k])) continue;
      out += (p1[k] * p2[n - k]).scaled(coeffs_[k]);
    }
    return out;
  }

  /// Z^extra * F.
  BinaryForm raised(int extra) const {
    std::vector<K> out(coeffs_);
    out.insert(out.end(), checked(extra), K(0));
    return BinaryForm(std::move(out));
  }

  BinaryForm scaled(const K& s) const {
    std::vector<K> out;
    out.reserve(coeffs_.size());
    for (const K& c : coeffs_) out.push_back(c * s);
    return BinaryForm(std::move(out));
  }

  /// Coefficient list of the dehomogenization F(x, 1), low degree first,
  /// trimmed of structurally zero top coefficients.
  std::vector<K> dehomogenized() const {
    std::vector<K> p(coeffs_);
    while (p.size() > 1 && realfn::is_zero(p.back())) p.pop_back();
    return p;
  }

  BinaryForm& operator+=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator-(const BinaryForm& a) { return a.scaled(K(-1)); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (realfn::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BinaryForm(std::move(out));
  }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

  BinaryForm pow(int e) const {
    BinaryForm r = constant(K(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  static std::size_t checked(int n) {
    if (n < 0) throw InvalidInput("negative degree");
    return static_cast<std::size_t>(n);
  }
  void require_same_degree(const BinaryForm& o) const {
    if (o.degree() != degree()) {
      throw InvalidInput("binary forms of degree " + std::to_string(degree()) + " and " +
                         std::to_string(o.degree()) + " cannot be added");
    }
  }

  std::vector<K> coeffs_;
};

/// Coefficients scaled so the largest has magnitude 1, then converted to double.
inline BinaryForm<Complex> to_float(const BinaryForm<GaussianRational>& f) {
  mpq_class biggest(0);
  for (const auto& c : f.coeffs()) {
    biggest = std::max({biggest, mpq_class(abs(c.re())), mpq_class(abs(c.im()))});
  }
  std::vector<Complex> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    if (sgn(biggest) == 0) {
      out.emplace_back(0.0, 0.0);
    } else {
      mpq_class re = c.re() / biggest;
      mpq_class im = c.im() / biggest;
      out.emplace_back(re.get_d(), im.get_d());
    }
  }
  return BinaryForm<Complex>(std::move(out));
}
inline BinaryForm<Complex> to_float(const BinaryForm<Complex>& f) { return f; }

/// Euclidean norm of the coefficient vector.
template <Scalar K>
double coefficient_norm(const BinaryForm<K>& f) {
  double s = 0;
  for (const K& c : f.coeffs()) s += std::norm(to_complex(c));
  return std::sqrt(s);
}

}  // namespace realfn
