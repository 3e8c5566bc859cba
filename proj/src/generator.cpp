#include "realfn/generator.hpp"

#include <algorithm>
#include <string>

namespace realfn {

namespace {

template <Scalar K>
K random_scalar(Rng& rng, bool real, long bound) {
  if constexpr (is_exact_v<K>) {
    std::uniform_int_distribution<long> u(-bound, bound);
    const long re = u(rng);
    return {mpq_class(re), mpq_class(real ? 0 : u(rng))};
  } else {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    return {re, real ? 0.0 : u(rng)};
  }
}

template <Scalar K>
BinaryForm<K> random_form(Rng& rng, int d, bool real) {
  std::vector<K> c;
  for (int k = 0; k <= d; ++k) c.push_back(random_scalar<K>(rng, real, 5));
  return BinaryForm<K>(std::move(c));
}

}  // namespace

template <Scalar K>
RationalMap<K> random_map(Rng& rng, int d, bool real_coefficients) {
  if (d < 0) throw InvalidInput("degree must be nonnegative");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BinaryForm<K> p = random_form<K>(rng, d, real_coefficients);
    BinaryForm<K> q = random_form<K>(rng, d, real_coefficients);
    if (p.is_zero() && q.is_zero()) continue;
    RationalMap<K> f(std::move(p), std::move(q));
    if (f.degree() == d) return f;
  }
  throw NumericalFailure("could not draw a map of degree " + std::to_string(d));
}

template <Scalar K>
Mat2<K> random_mobius(Rng& rng) {
  while (true) {
    const long bound = 3;
    Mat2<K> h{random_scalar<K>(rng, false, bound), random_scalar<K>(rng, false, bound),
              random_scalar<K>(rng, false, bound), random_scalar<K>(rng, false, bound)};
    if constexpr (is_exact_v<K>) {
      if (!h.det().is_zero()) return h;
    } else {
      if (std::abs(h.det()) > 0.1) return h;
    }
  }
}

template <Scalar K>
Mat2<K> random_antipodal_symmetry(Rng& rng) {
  while (true) {
    const K a = random_scalar<K>(rng, false, 3);
    const K b = random_scalar<K>(rng, false, 3);
    if constexpr (is_exact_v<K>) {
      if (a.is_zero() && b.is_zero()) continue;
    } else {
      if (std::norm(a) + std::norm(b) < 0.1) continue;
    }
    return {a, -conjugate(b), b, conjugate(a)};
  }
}

template <Scalar K>
RationalMap<K> transport_pair(Rng& rng, int d, Involution tau) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const BinaryForm<K> p = random_form<K>(rng, d, false);
    if (p.is_zero()) continue;
    RationalMap<K> f(p, transported(p, tau));
    if (f.degree() == d) return f;
  }
  throw NumericalFailure("could not draw a transport pair of degree " + std::to_string(d));
}

template <Scalar K>
Scrambled<K> scramble(std::uint64_t seed, int degree, Involution tau, VerdictKind cls) {
  if (degree < 1) throw InvalidInput("degree must be at least 1");
  Rng rng(seed);
  std::optional<RationalMap<K>> f;
  if (cls == VerdictKind::Real) {
    if (tau == Involution::Conj) {
      f = random_map<K>(rng, degree, true);
    } else {
      if (degree % 2) throw InvalidInput("real seeds for the antipodal involution need even degree");
      f = transport_pair<K>(rng, degree, tau);
    }
  } else if (cls == VerdictKind::Pseudoreal) {
    if (tau != Involution::Antipodal || degree % 2 == 0) {
      throw InvalidInput("pseudoreal seeds need the antipodal involution and odd degree");
    }
    const RationalMap<K> power =
        RationalMap<K>::from_coprime(BinaryForm<K>::monomial(degree, degree), BinaryForm<K>::monomial(degree, 0));
    f = power.post_composed(random_antipodal_symmetry<K>(rng));
    Verdict<K> check;
    check.kind = VerdictKind::Pseudoreal;
    check.g = Mobius<K>::identity();
    if (verify_verdict(*f, tau, check) > 1e-12) throw NumericalFailure("pseudoreal seed failed verification");
  } else {
    throw InvalidInput("class must be real or pseudoreal");
  }
  const Mat2<K> h = random_mobius<K>(rng);
  return {*f, h, f->post_composed(h), cls};
}

RationalMap<Complex> perturbed(const RationalMap<Complex>& f, double noise, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double scale = 0.0;
  for (const Complex& c : f.coefficient_vector()) scale = std::max(scale, std::abs(c));
  noise *= scale;
  std::vector<Complex> p, q;
  for (const Complex& c : f.numerator().coeffs()) p.push_back(c + noise * Complex(u(rng), u(rng)));
  for (const Complex& c : f.denominator().coeffs()) q.push_back(c + noise * Complex(u(rng), u(rng)));
  return RationalMap<Complex>::from_coprime(BinaryForm<Complex>(std::move(p)), BinaryForm<Complex>(std::move(q)));
}

#define REALFN_INSTANTIATE(K)                                                   \
  template RationalMap<K> random_map(Rng&, int, bool);                          \
  template Mat2<K> random_mobius(Rng&);                                         \
  template Mat2<K> random_antipodal_symmetry(Rng&);                             \
  template RationalMap<K> transport_pair(Rng&, int, Involution);                \
  template Scrambled<K> scramble(std::uint64_t, int, Involution, VerdictKind);

REALFN_INSTANTIATE(GaussianRational)
REALFN_INSTANTIATE(Complex)

#undef REALFN_INSTANTIATE

}  // namespace realfn
