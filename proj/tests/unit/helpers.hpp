#pragma once

#include <complex>
#include <initializer_list>
#include <random>
#include <vector>

#include "realfn/binary_form.hpp"
#include "realfn/numkernel.hpp"
#include "realfn/scalar.hpp"
#include "realfn/sphere_point.hpp"

namespace test {

using realfn::BinaryForm;
using realfn::Complex;
using realfn::GaussianRational;
using realfn::SpherePoint;

using QForm = BinaryForm<GaussianRational>;
using FForm = BinaryForm<Complex>;

inline GaussianRational gq(long re, long im = 0) { return {mpq_class(re), mpq_class(im)}; }
inline GaussianRational gq(long num, long den, long im_num, long im_den) {
  return {mpq_class(num, den), mpq_class(im_num, im_den)};
}

/// Exact form from integer coefficients, low power of X first.
inline QForm qform(std::initializer_list<long> c) {
  std::vector<GaussianRational> v;
  for (long x : c) v.push_back(gq(x));
  return QForm(std::move(v));
}
inline FForm fform(std::initializer_list<Complex> c) { return FForm(std::vector<Complex>(c)); }

inline FForm to_f(const QForm& f) {
  std::vector<Complex> v;
  for (const auto& c : f.coeffs()) v.push_back(c.to_complex());
  return FForm(std::move(v));
}

inline SpherePoint<Complex> fpoint(Complex x, Complex z = 1.0) { return {x, z}; }

/// Sum of chordal distances between two root lists matched greedily, or a
/// large number when multiplicities or sizes differ.
template <class A, class B>
double root_list_mismatch(const A& got, const B& want) {
  if (got.size() != want.size()) return 1e9;
  std::vector<bool> used(want.size(), false);
  double total = 0;
  for (const auto& g : got) {
    double best = 1e9;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < want.size(); ++j) {
      if (used[j] || want[j].second != g.multiplicity) continue;
      double d = realfn::chordal_distance(realfn::to_float(g.point), want[j].first);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best >= 1e9) return 1e9;
    used[best_j] = true;
    total += best;
  }
  return total;
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double re = u(rng);
  return {re, u(rng)};
}

}  // namespace test
