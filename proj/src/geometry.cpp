#include "realfn/geometry.hpp"

#include <limits>
#include <string>

namespace realfn {

std::string_view to_string(Involution tau) { return tau == Involution::Conj ? "conj" : "antipodal"; }

Involution involution_from_string(std::string_view name) {
  if (name == "conj") return Involution::Conj;
  if (name == "antipodal") return Involution::Antipodal;
  throw InvalidInput("unknown involution '" + std::string(name) + "' (expected conj or antipodal)");
}

template <Scalar K>
RationalMap<K>::RationalMap(BinaryForm<K> p, BinaryForm<K> q, const NumericConfig& cfg) {
  if (p.is_zero() && q.is_zero()) throw InvalidInput("numerator and denominator are both zero");
  const int d = std::max(p.degree(), q.degree());
  p = p.raised(d - p.degree());
  q = q.raised(d - q.degree());
  const BinaryForm<K> g = gcd_forms(p, q, cfg);
  if (g.degree() > 0) {
    p = divide_exactly(p, g);
    q = divide_exactly(q, g);
  }
  p_ = std::move(p);
  q_ = std::move(q);
}

namespace {

template <Scalar K>
bool distinct(const SpherePoint<K>& a, const SpherePoint<K>& b, const NumericConfig& cfg) {
  if constexpr (is_exact_v<K>) {
    return !(a == b);
  } else {
    return chordal_distance(a, b) > 10 * cfg.tol;
  }
}

template <Scalar K>
K bracket(const SpherePoint<K>& u, const SpherePoint<K>& v) {
  return u.x() * v.z() - u.z() * v.x();
}

// Matrix sending (t[0], t[1], t[2]) to (0, 1, inf).
template <Scalar K>
Mat2<K> normal_form(const std::array<SpherePoint<K>, 3>& t) {
  const K s = bracket(t[1], t[2]);
  const K r = bracket(t[1], t[0]);
  return {t[0].z() * s, -t[0].x() * s, t[2].z() * r, -t[2].x() * r};
}

}  // namespace

template <Scalar K>
Mobius<K> mobius_from_three_pairs(const std::array<SpherePoint<K>, 3>& src, const std::array<SpherePoint<K>, 3>& dst,
                                  const NumericConfig& cfg) {
  for (const auto* triple : {&src, &dst}) {
    const auto& t = *triple;
    if (!distinct(t[0], t[1], cfg) || !distinct(t[0], t[2], cfg) || !distinct(t[1], t[2], cfg)) {
      throw InvalidInput(triple == &src ? "repeated source point" : "repeated destination point");
    }
  }
  return Mobius<K>(normal_form(dst).adjugate() * normal_form(src), 0.0);
}

template <Scalar K>
double map_residual(const RationalMap<K>& f1, const RationalMap<K>& f2) {
  if (f1.degree() != f2.degree()) return 1.0;
  const auto v1 = f1.coefficient_vector();
  const auto v2 = f2.coefficient_vector();
  if constexpr (is_exact_v<K>) {
    if (proportional(BinaryForm<K>(v1), BinaryForm<K>(v2))) return 0.0;
  }
  std::vector<Complex> c1, c2;
  for (const auto& c : v1) c1.push_back(to_complex(c));
  for (const auto& c : v2) c2.push_back(to_complex(c));
  if constexpr (is_exact_v<K>) {
    // Exactly non-proportional: never report a zero residual.
    return std::max(proportionality_residual(c1, c2), std::numeric_limits<double>::min());
  } else {
    return proportionality_residual(c1, c2);
  }
}

template <Scalar K>
bool maps_equal_up_to_scale(const RationalMap<K>& f1, const RationalMap<K>& f2, double tol) {
  if constexpr (is_exact_v<K>) {
    return map_residual(f1, f2) == 0.0;
  } else {
    return map_residual(f1, f2) < tol;
  }
}

template <Scalar K>
double mobius_residual(const Mobius<K>& g, const Mobius<K>& h) {
  const auto& a = g.matrix();
  const auto& b = h.matrix();
  if constexpr (is_exact_v<K>) {
    if (g == h) return 0.0;
  }
  const std::vector<Complex> u{to_complex(a.a), to_complex(a.b), to_complex(a.c), to_complex(a.d)};
  const std::vector<Complex> v{to_complex(b.a), to_complex(b.b), to_complex(b.c), to_complex(b.d)};
  if constexpr (is_exact_v<K>) {
    return std::max(proportionality_residual(u, v), std::numeric_limits<double>::min());
  } else {
    return proportionality_residual(u, v);
  }
}

template class RationalMap<GaussianRational>;
template class RationalMap<Complex>;

#define REALFN_INSTANTIATE(K)                                                                                  \
  template Mobius<K> mobius_from_three_pairs(const std::array<SpherePoint<K>, 3>&,                             \
                                             const std::array<SpherePoint<K>, 3>&, const NumericConfig&);      \
  template double map_residual(const RationalMap<K>&, const RationalMap<K>&);                                  \
  template bool maps_equal_up_to_scale(const RationalMap<K>&, const RationalMap<K>&, double);                  \
  template double mobius_residual(const Mobius<K>&, const Mobius<K>&);

REALFN_INSTANTIATE(GaussianRational)
REALFN_INSTANTIATE(Complex)

#undef REALFN_INSTANTIATE

}  // namespace realfn
