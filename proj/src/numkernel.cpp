#include "realfn/numkernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace realfn {

namespace {

using GQ = GaussianRational;
using FForm = BinaryForm<Complex>;
using QForm = BinaryForm<GQ>;

// ---------------------------------------------------------------------------
// Exact univariate polynomials over Q(i), low degree first. Zero is {0}.

using Poly = std::vector<GQ>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool is_zero_poly(const Poly& p) { return p.size() == 1 && p[0].is_zero(); }

int poly_degree(const Poly& p) { return is_zero_poly(p) ? -1 : static_cast<int>(p.size()) - 1; }

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {GQ(0)};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * GQ(static_cast<long>(k));
  trim(d);
  return d;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), GQ(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  const int db = poly_degree(b);
  if (db < 0) throw InvalidInput("polynomial division by zero");
  trim(a);
  const int da = poly_degree(a);
  if (da < db) return {Poly{GQ(0)}, a};
  Poly q(da - db + 1, GQ(0));
  const GQ& lead = b[db];
  for (int k = da; k >= db; --k) {
    if (a[k].is_zero()) continue;
    GQ coef = a[k] / lead;
    q[k - db] = coef;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= coef * b[j];
  }
  a.resize(std::max(db, 1), GQ(0));
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_monic(Poly p) {
  if (is_zero_poly(p)) return p;
  GQ lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!is_zero_poly(b)) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!is_zero_poly(r)) throw InvalidInput("exact division left a remainder");
  return q;
}

QForm homogenize(Poly p, int degree) {
  p.resize(static_cast<std::size_t>(degree) + 1, GQ(0));
  return QForm(std::move(p));
}

// ---------------------------------------------------------------------------
// Gaussian integers, for content normalization.

struct GInt {
  mpz_class re, im;
  bool zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
};

GInt operator*(const GInt& a, const GInt& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GInt operator-(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

// Nearest integer to n/d for d > 0.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class out;
  mpz_class num = 2 * n + d;
  mpz_class den = 2 * d;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

GInt gint_round_div(const GInt& a, const GInt& b) {
  GInt num = a * GInt{b.re, -b.im};
  mpz_class n = b.norm();
  return {round_div(num.re, n), round_div(num.im, n)};
}

GInt gint_gcd(GInt a, GInt b) {
  while (!b.zero()) {
    GInt r = a - gint_round_div(a, b) * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

GInt gint_exact_div(const GInt& a, const GInt& b) {
  GInt num = a * GInt{b.re, -b.im};
  mpz_class n = b.norm();
  if (num.re % n != 0 || num.im % n != 0) throw InvalidInput("Gaussian integer division is not exact");
  return {num.re / n, num.im / n};
}

QForm normalized_exact(const QForm& f) {
  if (f.is_zero()) return f;
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GInt> v;
  v.reserve(f.coeffs().size());
  GInt content{0, 0};
  for (const auto& c : f.coeffs()) {
    mpq_class re = c.re() * lcm;
    mpq_class im = c.im() * lcm;
    v.push_back({re.get_num(), im.get_num()});
    if (!v.back().zero()) content = gint_gcd(content, v.back());
  }
  GInt lead;
  for (auto& g : v) {
    if (!g.zero()) g = gint_exact_div(g, content);
  }
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (!it->zero()) {
      lead = *it;
      break;
    }
  }
  // Unit u in {1, i, -1, -i} putting u * lead into {Re > 0, Im >= 0}.
  GInt unit{1, 0};
  const GInt i{0, 1};
  for (int turn = 0; turn < 4; ++turn) {
    GInt rotated = unit * lead;
    if (rotated.re > 0 && rotated.im >= 0) break;
    unit = unit * i;
  }
  std::vector<GQ> out;
  out.reserve(v.size());
  for (const auto& g : v) {
    GInt w = unit * g;
    out.emplace_back(mpq_class(w.re), mpq_class(w.im));
  }
  return QForm(std::move(out));
}

FForm normalized_float(const FForm& f) {
  double biggest = 0;
  for (const auto& c : f.coeffs()) biggest = std::max(biggest, std::abs(c));
  if (biggest == 0) return f;
  for (const auto& c : f.coeffs()) {
    if (std::abs(c) >= biggest * (1 - 1e-12)) return f.scaled(1.0 / c);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Exact algorithms.

QForm gcd_exact(const QForm& a, const QForm& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero forms");
  if (a.is_zero()) return normalized_exact(b);
  if (b.is_zero()) return normalized_exact(a);
  const int e = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
  Poly g = poly_gcd(a.dehomogenized(), b.dehomogenized());
  return normalized_exact(homogenize(g, poly_degree(g)).raised(e));
}

std::vector<SquarefreeFactor<GQ>> squarefree_exact(const QForm& f) {
  if (f.is_zero()) throw InvalidInput("square-free decomposition of the zero form");
  std::map<int, QForm> by_exponent;
  Poly core = f.dehomogenized();
  if (poly_degree(core) >= 1) {
    // Yun's algorithm.
    Poly d_core = poly_derivative(core);
    Poly a0 = poly_gcd(core, d_core);
    Poly b = poly_exact_div(core, a0);
    Poly c = poly_exact_div(d_core, a0);
    Poly d = poly_sub(c, poly_derivative(b));
    for (int i = 1; poly_degree(b) > 0; ++i) {
      Poly a = poly_gcd(b, d);
      if (poly_degree(a) > 0) by_exponent.emplace(i, homogenize(a, poly_degree(a)));
      b = poly_exact_div(b, a);
      c = poly_exact_div(d, a);
      d = poly_sub(c, poly_derivative(b));
    }
  }
  if (int e = f.multiplicity_at_infinity(); e > 0) {
    const QForm z = QForm::linear(GQ(0), GQ(1));
    auto it = by_exponent.find(e);
    if (it == by_exponent.end()) {
      by_exponent.emplace(e, z);
    } else {
      it->second = it->second * z;
    }
  }
  std::vector<SquarefreeFactor<GQ>> out;
  for (auto& [k, g] : by_exponent) out.push_back({normalized_exact(g), k});
  return out;
}

template <class M>
GQ determinant_exact(M m) {
  const std::size_t n = m.size();
  GQ det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return GQ(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      GQ factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

// Best rational approximation with bounded denominator (continued fractions).
mpq_class best_rational(double x, long max_den) {
  if (!std::isfinite(x)) return mpq_class(0);
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a_d = std::floor(r);
    if (std::abs(a_d) > 1e15) break;
    const long a = static_cast<long>(a_d);
    const long h2 = a * h1 + h0;
    const long k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - a_d;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= 1e-15 * std::max(1.0, std::abs(x)) ||
        frac < 1e-300) {
      break;
    }
    r = 1.0 / frac;
  }
  if (k1 == 0) return mpq_class(x);
  mpq_class q(h1, k1);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Floating-point algorithms.

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

CVec to_vec(const FForm& f) {
  CVec v(f.degree() + 1);
  for (int k = 0; k <= f.degree(); ++k) v(k) = f[k];
  return v;
}

FForm from_vec(const CVec& v) {
  std::vector<Complex> c(v.data(), v.data() + v.size());
  return FForm(std::move(c));
}

// Multiplication-by-a matrix acting on multipliers of degree r.
CMat convolution(const CVec& a, int r) {
  CMat m = CMat::Zero(a.size() + r, r + 1);
  for (int j = 0; j <= r; ++j) m.block(j, j, a.size(), 1) = a;
  return m;
}

FForm gcd_float(const FForm& a, const FForm& b, double tol) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero forms");
  if (a.is_zero()) return normalized_float(b);
  if (b.is_zero()) return normalized_float(a);
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 || n == 0) return FForm::constant(1.0);
  const CVec va = to_vec(a) / coefficient_norm(a);
  const CVec vb = to_vec(b) / coefficient_norm(b);
  for (int k = std::min(m, n); k >= 1; --k) {
    CMat s(m + n - k + 1, (n - k + 1) + (m - k + 1));
    s.leftCols(n - k + 1) = convolution(va, n - k);
    s.rightCols(m - k + 1) = convolution(vb, m - k);
    Eigen::JacobiSVD<CMat> svd(s, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > tol * sv(0)) continue;
    const CVec null = svd.matrixV().col(s.cols() - 1);
    const CVec cof_b = null.head(n - k + 1);
    const CVec cof_a = -null.tail(m - k + 1);
    CMat sys(m + n + 2, k + 1);
    sys.topRows(m + 1) = convolution(cof_a, k);
    sys.bottomRows(n + 1) = convolution(cof_b, k);
    CVec rhs(m + n + 2);
    rhs << va, vb;
    const CVec g = sys.colPivHouseholderQr().solve(rhs);
    return normalized_float(from_vec(g));
  }
  return FForm::constant(1.0);
}

FForm divide_float(const FForm& a, const FForm& b) {
  const int r = a.degree() - b.degree();
  if (r < 0) throw InvalidInput("division by a form of larger degree");
  const CVec q = convolution(to_vec(b), r).colPivHouseholderQr().solve(to_vec(a));
  return from_vec(q);
}

// A unitary change of coordinates [X:Z] -> U [X:Z] with U = (a, -conj c; c, conj a).
struct Rotation {
  Complex a, c;

  FForm apply(const FForm& f) const { return f.substituted(a, -std::conj(c), c, std::conj(a)); }
  FForm unapply(const FForm& f) const { return f.substituted(std::conj(a), std::conj(c), -c, a); }
  SpherePoint<Complex> map(Complex x, Complex z) const {
    return {a * x - std::conj(c) * z, c * x + std::conj(a) * z};
  }
};

// Picks, from a fixed spread of points, the one where |f| is largest, and
// rotates it to infinity so that no root of the rotated form is near [1:0].
Rotation choose_rotation(const FForm& f) {
  constexpr int kCandidates = 24;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double scale = coefficient_norm(f);
  Rotation best{1.0, 0.0};
  double best_value = -1;
  for (int j = 0; j < kCandidates; ++j) {
    const double h = 1.0 - 2.0 * (j + 0.5) / kCandidates;
    const double theta = std::acos(h);
    const double phi = 0.3183 + golden * j;
    const Complex a = std::polar(std::cos(theta / 2), phi);
    const Complex c = Complex(std::sin(theta / 2), 0.0);
    const double value = std::abs(f.eval(a, c)) / scale;
    if (value > best_value) {
      best_value = value;
      best = {a, c};
    }
  }
  return best;
}

Complex horner(std::span<const Complex> p, Complex x) {
  Complex r = p.back();
  for (int k = static_cast<int>(p.size()) - 2; k >= 0; --k) r = r * x + p[k];
  return r;
}

void aberth(std::span<const Complex> p, std::vector<Complex>& z, int max_iterations) {
  std::vector<Complex> dp(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) dp[k - 1] = p[k] * static_cast<double>(k);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < max_iterations; ++it) {
    double biggest_step = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const Complex pv = horner(p, z[k]);
      if (pv == Complex(0.0)) continue;
      const Complex dv = horner(dp, z[k]);
      if (dv == Complex(0.0)) continue;
      const Complex ratio = pv / dv;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k && z[j] != z[k]) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      biggest_step = std::max(biggest_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (biggest_step < 4 * eps) break;
  }
}

// Roots of the rotated form f, mapped back through the rotation; structural
// zeros at the top of f become copies of the rotated infinity.
std::vector<SpherePoint<Complex>> chart_roots(const FForm& f, const Rotation& rot) {
  std::vector<SpherePoint<Complex>> out;
  const std::vector<Complex> p = f.dehomogenized();
  for (Complex y : detail::polynomial_roots(p)) out.push_back(rot.map(y, 1.0));
  for (int k = 0; k < f.multiplicity_at_infinity(); ++k) out.push_back(rot.map(1.0, 0.0));
  return out;
}

std::vector<std::pair<FForm, int>> yun_float(const FForm& r, double tol) {
  std::vector<std::pair<FForm, int>> out;
  const FForm rx = r.diff_x();
  const FForm a0 = gcd_float(r, rx, tol);
  FForm b = divide_float(r, a0);
  FForm c = divide_float(rx, a0);
  FForm d = c - b.diff_x();
  for (int i = 1; b.degree() > 0; ++i) {
    if (i > r.degree() + 1) throw NumericalFailure("square-free decomposition did not terminate");
    const double scale = std::max(coefficient_norm(c), coefficient_norm(b.diff_x()));
    const FForm a = coefficient_norm(d) <= tol * scale ? normalized_float(b) : gcd_float(b, d, tol);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divide_float(b, a);
    if (b.degree() == 0) break;
    c = divide_float(d, a);
    d = c - b.diff_x();
  }
  return out;
}

std::vector<SquarefreeFactor<Complex>> squarefree_float(const FForm& f, const NumericConfig& cfg) {
  if (f.is_zero()) throw InvalidInput("square-free decomposition of the zero form");
  if (f.degree() == 0) return {};
  const Rotation rot = choose_rotation(f);
  std::vector<SquarefreeFactor<Complex>> out;
  for (auto& [a, k] : yun_float(rot.apply(f), cfg.tol)) out.push_back({normalized_float(rot.unapply(a)), k});
  return out;
}

RootList<Complex> roots_float(const FForm& f, const NumericConfig& cfg) {
  if (f.is_zero()) throw InvalidInput("roots of the zero form");
  const int n = f.degree();
  if (n == 0) return {};
  const Rotation rot = choose_rotation(f);
  const FForm r = rot.apply(f);

  RootList<Complex> entries;
  int total = 0;
  for (auto& [a, k] : yun_float(r, cfg.tol)) {
    for (const auto& p : chart_roots(a, rot)) entries.push_back({p, k, true});
    total += k * a.degree();
  }
  if (total != n) {
    throw NumericalFailure("square-free exponents account for " + std::to_string(total) + " of " +
                           std::to_string(n) + " roots");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (chordal_distance(entries[i].point, entries[j].point) <= cfg.cluster_radius()) {
        throw NumericalFailure("distinct square-free roots fall inside one cluster");
      }
    }
  }

  // Independent check: roots of the full polynomial, each assigned to its
  // nearest distinct root, must reproduce the exponents.
  std::vector<int> counts(entries.size(), 0);
  for (const auto& p : chart_roots(r, rot)) {
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const double dist = chordal_distance(p, entries[i].point);
      if (dist < best) {
        second = best;
        best = dist;
        best_index = i;
      } else if (dist < second) {
        second = dist;
      }
    }
    if (second < 2 * best) throw NumericalFailure("root cluster assignment is ambiguous");
    ++counts[best_index];
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (counts[i] != entries[i].multiplicity) {
      throw NumericalFailure("cluster size " + std::to_string(counts[i]) + " disagrees with square-free exponent " +
                             std::to_string(entries[i].multiplicity));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.point, b.point); });
  return entries;
}

RootList<GQ> roots_exact(const QForm& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero form");
  RootList<GQ> out;
  for (auto [g, k] : squarefree_exact(f)) {
    if (g.multiplicity_at_infinity() > 0) {
      // Square-free, so Z divides g at most once.
      out.push_back({SpherePoint<GQ>::infinity(), k, false});
      if (g.degree() == 1) continue;
      std::vector<GQ> rest(g.coeffs().begin(), g.coeffs().end() - 1);
      g = QForm(std::move(rest));
    }
    if (g.degree() == 1) {
      out.push_back({SpherePoint<GQ>(-g[0], g[1]), k, false});
      continue;
    }
    for (const auto& p : detail::simple_roots(to_float(g))) {
      const Complex w = p.x() / p.z();
      const GQ candidate(best_rational(w.real(), 1'000'000), best_rational(w.imag(), 1'000'000));
      if (p.z() != Complex(0.0) && g.eval(candidate, GQ(1)).is_zero()) {
        out.push_back({SpherePoint<GQ>::finite(candidate), k, false});
      } else {
        out.push_back({SpherePoint<GQ>(GQ::from_complex(p.x()), GQ::from_complex(p.z())), k, true});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonical_less(to_float(a.point), to_float(b.point)); });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

namespace detail {

std::vector<Complex> polynomial_roots(std::span<const Complex> p) {
  const int n = static_cast<int>(p.size()) - 1;
  if (n <= 0) return {};
  if (p[n] == Complex(0.0)) throw InvalidInput("polynomial_roots needs a nonzero top coefficient");
  if (n == 1) return {-p[0] / p[1]};
  CMat companion = CMat::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<CMat> solver(companion, false);
  std::vector<Complex> z(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  aberth(p, z, 500);
  return z;
}

std::vector<SpherePoint<Complex>> simple_roots(const BinaryForm<Complex>& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero form");
  const Rotation rot = choose_rotation(f);
  return chart_roots(rot.apply(f), rot);
}

}  // namespace detail

template <Scalar K>
BinaryForm<K> normalized(const BinaryForm<K>& f) {
  if constexpr (is_exact_v<K>) {
    return normalized_exact(f);
  } else {
    return normalized_float(f);
  }
}

template <Scalar K>
BinaryForm<K> gcd_forms(const BinaryForm<K>& a, const BinaryForm<K>& b, const NumericConfig& cfg) {
  if constexpr (is_exact_v<K>) {
    return gcd_exact(a, b);
  } else {
    return gcd_float(a, b, cfg.tol);
  }
}

template <Scalar K>
BinaryForm<K> divide_exactly(const BinaryForm<K>& a, const BinaryForm<K>& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero form");
  const int r = a.degree() - b.degree();
  if (r < 0) throw InvalidInput("division by a form of larger degree");
  if constexpr (is_exact_v<K>) {
    Poly pa(a.coeffs().begin(), a.coeffs().end());
    Poly pb(b.coeffs().begin(), b.coeffs().end());
    trim(pa);
    trim(pb);
    Poly q = poly_exact_div(pa, pb);
    if (poly_degree(q) > r) throw InvalidInput("exact division left a remainder");
    return homogenize(std::move(q), r);
  } else {
    return divide_float(a, b);
  }
}

template <Scalar K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const BinaryForm<K>& f, const NumericConfig& cfg) {
  if constexpr (is_exact_v<K>) {
    return squarefree_exact(f);
  } else {
    return squarefree_float(f, cfg);
  }
}

template <Scalar K>
BinaryForm<K> squarefree_part(const BinaryForm<K>& f, const NumericConfig& cfg) {
  BinaryForm<K> out = BinaryForm<K>::constant(K(1));
  for (const auto& [g, k] : squarefree_decomposition(f, cfg)) out = out * g;
  return normalized(out);
}

template <Scalar K>
K resultant(const BinaryForm<K>& a, const BinaryForm<K>& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidInput("resultant of a zero form");
  const int m = a.degree();
  const int n = b.degree();
  const int size = m + n;
  if (size == 0) return K(1);
  if constexpr (is_exact_v<K>) {
    std::vector<std::vector<K>> s(size, std::vector<K>(size, K(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    return determinant_exact(std::move(s));
  } else {
    CMat s = CMat::Zero(size, size);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= m; ++j) s(i, i + j) = a[m - j];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= n; ++j) s(n + i, i + j) = b[n - j];
    return s.determinant();
  }
}

template <Scalar K>
RootList<K> roots_with_multiplicities(const BinaryForm<K>& f, const NumericConfig& cfg) {
  if constexpr (is_exact_v<K>) {
    return roots_exact(f);
  } else {
    return roots_float(f, cfg);
  }
}

template <Scalar K>
BinaryForm<K> wronskian(const BinaryForm<K>& p, const BinaryForm<K>& q) {
  return p.diff_x() * q.diff_z() - p.diff_z() * q.diff_x();
}

double proportionality_residual(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return 1.0;
  double na = 0, nb = 0;
  for (Complex c : a) na += std::norm(c);
  for (Complex c : b) nb += std::norm(c);
  na = std::sqrt(na);
  nb = std::sqrt(nb);
  if (na == 0 || nb == 0) return na == nb ? 0.0 : 1.0;
  Complex inner = 0;
  for (std::size_t k = 0; k < a.size(); ++k) inner += std::conj(a[k]) * b[k];
  inner /= na * nb;
  double r = 0;
  for (std::size_t k = 0; k < a.size(); ++k) r += std::norm(b[k] / nb - inner * a[k] / na);
  return std::sqrt(r);
}

template <Scalar K>
bool proportional(const BinaryForm<K>& a, const BinaryForm<K>& b, double tol) {
  if (a.degree() != b.degree()) return false;
  if constexpr (is_exact_v<K>) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    int pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    const K s = a[pivot] / b[pivot];
    for (int k = 0; k <= a.degree(); ++k) {
      if (!(a[k] == b[k] * s)) return false;
    }
    return true;
  } else {
    return proportionality_residual(a.coeffs(), b.coeffs()) < tol;
  }
}

#define REALFN_INSTANTIATE(K)                                                                              \
  template BinaryForm<K> normalized(const BinaryForm<K>&);                                                 \
  template BinaryForm<K> gcd_forms(const BinaryForm<K>&, const BinaryForm<K>&, const NumericConfig&);      \
  template BinaryForm<K> divide_exactly(const BinaryForm<K>&, const BinaryForm<K>&);                       \
  template std::vector<SquarefreeFactor<K>> squarefree_decomposition(const BinaryForm<K>&,                 \
                                                                     const NumericConfig&);                \
  template BinaryForm<K> squarefree_part(const BinaryForm<K>&, const NumericConfig&);                      \
  template K resultant(const BinaryForm<K>&, const BinaryForm<K>&);                                        \
  template RootList<K> roots_with_multiplicities(const BinaryForm<K>&, const NumericConfig&);              \
  template BinaryForm<K> wronskian(const BinaryForm<K>&, const BinaryForm<K>&);                            \
  template bool proportional(const BinaryForm<K>&, const BinaryForm<K>&, double);

REALFN_INSTANTIATE(GaussianRational)
REALFN_INSTANTIATE(Complex)

#undef REALFN_INSTANTIATE

}  // namespace realfn
