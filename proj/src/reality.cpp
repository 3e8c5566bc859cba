#include "realfn/reality.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "realfn/numkernel.hpp"

namespace realfn {

using GQ = GaussianRational;

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Real:
      return "real";
    case VerdictKind::Pseudoreal:
      return "pseudoreal";
    case VerdictKind::NotEquivalent:
      break;
  }
  return "not_equivalent";
}

namespace {

constexpr int kProbeCount = 64;
constexpr int kDescentRetries = 32;

// Fibonacci-sphere probe j, rotated by a seed-dependent angle. Exact mode
// rounds the representative to multiples of 1/256.
template <Scalar K>
SpherePoint<K> probe(int j, std::uint64_t seed) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double h = 1.0 - 2.0 * (j + 0.5) / kProbeCount;
  const double theta = std::acos(h);
  const double phi = 0.5 + 2.0 * std::numbers::pi * static_cast<double>(seed % 997) / 997.0 + golden * j;
  const Complex x = std::polar(std::cos(theta / 2), phi);
  const Complex z(std::sin(theta / 2), 0.0);
  if constexpr (is_exact_v<K>) {
    auto round = [](Complex w) {
      return GQ::from_complex({std::round(w.real() * 256) / 256, std::round(w.imag() * 256) / 256});
    };
    return {round(x), round(z)};
  } else {
    return {x, z};
  }
}

template <Scalar K>
bool separated(const SpherePoint<K>& a, const SpherePoint<K>& b) {
  if constexpr (is_exact_v<K>) {
    return !(a == b);
  } else {
    return chordal_distance(a, b) > 1e-2;
  }
}

// Three probes with non-critical, pairwise separated f-values.
template <Scalar K>
std::array<SpherePoint<K>, 3> choose_probes(const RationalMap<K>& f, const NumericConfig& cfg) {
  const BinaryForm<K> w = wronskian(f);
  std::vector<SpherePoint<Complex>> critical;
  if constexpr (!is_exact_v<K>) {
    if (w.degree() > 0) {
      for (const auto& r : roots_with_multiplicities(w, cfg)) critical.push_back(r.point);
    }
  }
  std::vector<SpherePoint<K>> chosen;
  for (int j = 0; j < kProbeCount && chosen.size() < 3; ++j) {
    const SpherePoint<K> p = probe<K>(j, cfg.seed);
    if constexpr (is_exact_v<K>) {
      if (is_zero(w.eval(p.x(), p.z()))) continue;
    } else {
      bool near = false;
      for (const auto& c : critical) near = near || chordal_distance(c, p) < 10 * cfg.tol;
      if (near) continue;
    }
    bool ok = true;
    for (const auto& q : chosen) ok = ok && separated(f(p), f(q));
    if (ok) chosen.push_back(p);
  }
  if (chosen.size() < 3) throw NumericalFailure("no three probe points with distinct non-critical values");
  return {chosen[0], chosen[1], chosen[2]};
}

template <Scalar K>
RationalMap<K> apply_matrix(const RationalMap<K>& f, const Mat2<K>& m) {
  return f.post_composed(m);
}

// Least-squares S with S (P, Q) = (P_F, Q_F).
Mat2<Complex> least_squares_factor(const RationalMap<Complex>& f, const RationalMap<Complex>& big_f) {
  const int n = f.degree() + 1;
  Eigen::MatrixXcd a(n, 2);
  Eigen::VectorXcd fp(n), fq(n);
  for (int k = 0; k < n; ++k) {
    a(k, 0) = f.numerator()[k];
    a(k, 1) = f.denominator()[k];
    fp(k) = big_f.numerator()[k];
    fq(k) = big_f.denominator()[k];
  }
  const auto qr = a.colPivHouseholderQr();
  const Eigen::VectorXcd top = qr.solve(fp);
  const Eigen::VectorXcd bottom = qr.solve(fq);
  return {top(0), top(1), bottom(0), bottom(1)};
}

double frobenius2(const Mat2<Complex>& m) {
  return std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
}

// Gaussian rational c with |c|^2 = r, for r = p/q with p q a sum of two
// squares below 1e12.
std::optional<GQ> norm_root(const mpq_class& r) {
  const mpz_class n = r.get_num() * r.get_den();
  if (n > mpz_class("1000000000000")) return std::nullopt;
  for (mpz_class a = 0; a * a <= n; ++a) {
    const mpz_class rest = n - a * a;
    const mpz_class b = sqrt(rest);
    if (b * b == rest) return GQ(mpq_class(a, r.get_den()), mpq_class(b, r.get_den()));
  }
  return std::nullopt;
}

template <Scalar K>
K random_entry(std::mt19937_64& rng) {
  if constexpr (is_exact_v<K>) {
    std::uniform_int_distribution<int> u(-3, 3);
    const int re = u(rng);
    return GQ(mpq_class(re), mpq_class(u(rng)));
  } else {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    return Complex(re, u(rng));
  }
}

template <Scalar K>
bool invertible(const Mat2<K>& g, double tol) {
  if constexpr (is_exact_v<K>) {
    return !g.det().is_zero();
  } else {
    const double biggest = std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)});
    return std::abs(g.det()) > tol * biggest * biggest;
  }
}

}  // namespace

template <Scalar K>
RationalMap<K> conj_transport(const RationalMap<K>& f, Involution tau) {
  return RationalMap<K>::from_coprime(transported(f.numerator(), tau), transported(f.denominator(), tau));
}

template <Scalar K>
std::optional<Mat2<K>> mobius_factor_matrix(const RationalMap<K>& f, const RationalMap<K>& big_f,
                                            const NumericConfig& cfg) {
  if (f.degree() < 1) throw InvalidInput("Mobius factors need maps of degree at least 1");
  if (f.degree() != big_f.degree()) return std::nullopt;

  const auto src = choose_probes(f, cfg);
  const std::array<SpherePoint<K>, 3> values{f(src[0]), f(src[1]), f(src[2])};
  const std::array<SpherePoint<K>, 3> targets{big_f(src[0]), big_f(src[1]), big_f(src[2])};
  std::optional<Mobius<K>> m;
  try {
    m = mobius_from_three_pairs(values, targets, cfg);
  } catch (const InvalidInput&) {
    return std::nullopt;  // F collapses probe values f keeps apart
  }

  if constexpr (is_exact_v<K>) {
    const RationalMap<K> mf = apply_matrix(f, m->matrix());
    const auto u = mf.coefficient_vector();
    const auto v = big_f.coefficient_vector();
    std::size_t pivot = 0;
    while (pivot < u.size() && u[pivot].is_zero()) ++pivot;
    const GQ s = v[pivot] / u[pivot];
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (!(v[k] == u[k] * s)) return std::nullopt;
    }
    return m->matrix().scaled(s);
  } else {
    // Polish on all coefficients; the probe solution must agree with it.
    const Mat2<Complex> s = least_squares_factor(f, big_f);
    if (!invertible(s, cfg.tol)) return std::nullopt;
    if (mobius_residual(Mobius<Complex>(s, 0.0), *m) > std::sqrt(cfg.tol)) return std::nullopt;
    if (map_residual(apply_matrix(f, s), big_f) >= cfg.match_radius()) return std::nullopt;
    return s;
  }
}

template <Scalar K>
std::optional<Mobius<K>> mobius_factor(const RationalMap<K>& f, const RationalMap<K>& big_f,
                                       const NumericConfig& cfg) {
  const auto s = mobius_factor_matrix(f, big_f, cfg);
  if (!s) return std::nullopt;
  return Mobius<K>(*s, 0.0);
}

template <Scalar K>
DescentResult<K> descent_solve(const Mat2<K>& m, [[maybe_unused]] Involution tau, const NumericConfig& cfg) {
  DescentResult<K> out;
  const Mat2<K> n = m.conj() * m;
  int sign = 0;
  if constexpr (is_exact_v<K>) {
    if (!n.b.is_zero() || !n.c.is_zero() || !(n.a == n.d) || !n.a.is_real() || n.a.is_zero()) return out;
    sign = sgn(n.a.re());
    const auto c = norm_root(abs(n.a.re()));
    if (!c) throw NumericalFailure("|lambda| has no Gaussian-rational square root; rescale the factor");
    out.c = *c;
  } else {
    const double scale = frobenius2(m);
    const Complex lambda = (n.a + n.d) / 2.0;
    const double off = std::abs(n.b) + std::abs(n.c) + std::abs(n.a - n.d) + std::abs(lambda.imag());
    if (off > cfg.match_radius() * scale || std::abs(lambda.real()) <= cfg.match_radius() * scale) return out;
    sign = lambda.real() > 0 ? 1 : -1;
    out.c = std::sqrt(std::abs(lambda.real()));
  }
  out.lambda_sign = sign;

  std::mt19937_64 rng(cfg.seed);
  const Mat2<K> j = Mat2<K>::negative_inverse();
  // X = I and X = iI first: they give g = identity when m already is the
  // identity (real class) or J (pseudoreal class).
  for (int attempt = -2; attempt < kDescentRetries; ++attempt) {
    const Mat2<K> x = attempt == -2   ? Mat2<K>::identity()
                      : attempt == -1 ? Mat2<K>::identity().scaled(imag_unit<K>())
                                      : Mat2<K>{random_entry<K>(rng), random_entry<K>(rng), random_entry<K>(rng),
                                                random_entry<K>(rng)};
    const Mat2<K> g = sign > 0 ? x.scaled(out.c) + x.conj() * m : x.scaled(out.c) + j * x.conj() * m;
    if (!invertible(g, cfg.tol)) continue;
    out.kind = sign > 0 ? DescentClass::RealClass : DescentClass::PseudorealClass;
    out.matrix = g;
    out.g = Mobius<K>(g, 0.0);
    return out;
  }
  throw NumericalFailure("no invertible descent matrix after 32 random draws");
}

template <Scalar K>
CriterionResult<K> divisor_criterion(const RationalMap<K>& f, Involution tau, const NumericConfig& cfg) {
  CriterionResult<K> out;
  if (f.degree() <= 1) return out;
  if constexpr (is_exact_v<K>) {
    const BinaryForm<K> t = sigma_form_exact(f, cfg);
    out.stable = sigma_form_stable(t, tau);
    out.sigma = divisor_of(t);
    out.witness = is_tau_stable(out.sigma, tau, cfg);
    if (out.witness.stable != out.stable) {
      throw NumericalFailure("exact Sigma form and its float roots disagree on stability");
    }
  } else {
    out.sigma = sigma_divisor(f, cfg);
    out.witness = is_tau_stable(out.sigma, tau, cfg);
    out.stable = out.witness.stable;
  }
  return out;
}

template <Scalar K>
Verdict<K> reality_test(const RationalMap<K>& f, Involution tau, const NumericConfig& cfg) {
  Verdict<K> v;
  if (f.degree() == 0) {
    // Move the constant value to 0.
    const K& a = f.numerator()[0];
    const K& b = f.denominator()[0];
    const Mat2<K> g = is_zero(b) ? Mat2<K>{K(0), K(1), K(1), K(0)} : Mat2<K>{b, -a, K(0), b};
    v.kind = VerdictKind::Real;
    v.g = Mobius<K>(g, 0.0);
    v.residual = verify_verdict(f, tau, v);
    return v;
  }

  const CriterionResult<K> criterion = divisor_criterion(f, tau, cfg);
  v.sigma = criterion.sigma;
  v.witness = criterion.witness;

  std::optional<DescentResult<K>> descent;
  if (const auto s = mobius_factor_matrix(f, conj_transport(f, tau), cfg)) {
    descent = descent_solve(*s, tau, cfg);
    v.lambda_sign = descent->lambda_sign;
    if (descent->kind == DescentClass::Inconsistent) descent.reset();
  }

  if (criterion.stable != descent.has_value()) {
    throw NumericalFailure(criterion.stable ? "Sigma is stable but no descent was constructed"
                                            : "descent succeeded but Sigma is not stable");
  }
  if (!descent) return v;
  if (tau == Involution::Conj && descent->kind == DescentClass::PseudorealClass) {
    throw NumericalFailure("pseudoreal class for an involution with real points");
  }
  v.kind = descent->kind == DescentClass::RealClass ? VerdictKind::Real : VerdictKind::Pseudoreal;
  v.g = descent->g;
  v.residual = verify_verdict(f, tau, v);
  return v;
}

template <Scalar K>
double verify_verdict(const RationalMap<K>& f, Involution tau, const Verdict<K>& v) {
  if (v.kind == VerdictKind::NotEquivalent || !v.g) throw InvalidInput("only real and pseudoreal verdicts verify");
  const RationalMap<K> h = f.post_composed(*v.g);
  const RationalMap<K> t = conj_transport(h, tau);
  if (v.kind == VerdictKind::Real) return map_residual(t, h);
  return map_residual(t, h.post_composed(Mat2<K>::negative_inverse()));
}

#define REALFN_INSTANTIATE(K)                                                                                   \
  template RationalMap<K> conj_transport(const RationalMap<K>&, Involution);                                    \
  template std::optional<Mat2<K>> mobius_factor_matrix(const RationalMap<K>&, const RationalMap<K>&,            \
                                                       const NumericConfig&);                                   \
  template std::optional<Mobius<K>> mobius_factor(const RationalMap<K>&, const RationalMap<K>&,                 \
                                                  const NumericConfig&);                                        \
  template DescentResult<K> descent_solve(const Mat2<K>&, Involution, const NumericConfig&);                    \
  template CriterionResult<K> divisor_criterion(const RationalMap<K>&, Involution, const NumericConfig&);       \
  template Verdict<K> reality_test(const RationalMap<K>&, Involution, const NumericConfig&);                    \
  template double verify_verdict(const RationalMap<K>&, Involution, const Verdict<K>&);

REALFN_INSTANTIATE(GaussianRational)
REALFN_INSTANTIATE(Complex)

#undef REALFN_INSTANTIATE

}  // namespace realfn
