#include "realfn/divisor.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "realfn/numkernel.hpp"

namespace realfn {

using GQ = GaussianRational;
using QForm = BinaryForm<GQ>;
using FForm = BinaryForm<Complex>;

Divisor::Divisor(std::vector<DivisorEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.multiplicity <= 0) throw InvalidInput("divisor multiplicities must be positive");
  }
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const DivisorEntry& a, const DivisorEntry& b) { return canonical_less(a.point, b.point); });
}

int Divisor::degree() const {
  int n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

Divisor Divisor::operator+(const Divisor& other) const {
  std::vector<DivisorEntry> all(entries_);
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return Divisor(std::move(all));
}

namespace {

template <Scalar K>
Divisor from_roots(const RootList<K>& roots) {
  std::vector<DivisorEntry> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back({to_float(r.point), r.multiplicity});
  return Divisor(std::move(out));
}

template <Scalar K>
BinaryForm<K> pencil(const RationalMap<K>& f, const SpherePoint<K>& v) {
  return f.numerator().scaled(v.z()) - f.denominator().scaled(v.x());
}

struct CriticalPoint {
  SpherePoint<Complex> point;
  int wronskian_multiplicity;
};

struct CriticalGroup {
  SpherePoint<Complex> value;
  std::vector<CriticalPoint> points;
};

// Critical points grouped by critical value; values closer than the cluster
// radius are one value.
std::vector<CriticalGroup> critical_groups(const RationalMap<Complex>& f, const NumericConfig& cfg) {
  std::vector<CriticalGroup> groups;
  if (f.degree() <= 1) return groups;
  for (const auto& r : roots_with_multiplicities(wronskian(f), cfg)) {
    const SpherePoint<Complex> v = f(r.point);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const CriticalGroup& g) {
      return chordal_distance(g.value, v) <= cfg.cluster_radius();
    });
    if (it == groups.end()) {
      groups.push_back({v, {}});
      it = groups.end() - 1;
    }
    it->points.push_back({r.point, r.multiplicity});
  }
  std::sort(groups.begin(), groups.end(),
            [](const CriticalGroup& a, const CriticalGroup& b) { return canonical_less(a.value, b.value); });
  return groups;
}

// Minimum-cost perfect assignment on a square matrix (Hungarian method with
// potentials). Returns row -> column.
std::vector<int> optimal_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

template <Scalar K>
Divisor preimage_divisor(const RationalMap<K>& f, const SpherePoint<K>& v, const NumericConfig& cfg) {
  if (f.degree() < 1) throw InvalidInput("fibers of a constant map are not divisors");
  return from_roots(roots_with_multiplicities(pencil(f, v), cfg));
}

template <Scalar K>
std::vector<SpherePoint<Complex>> critical_values(const RationalMap<K>& f, const NumericConfig& cfg) {
  if (f.degree() < 1) throw InvalidInput("a constant map has no critical values");
  std::vector<SpherePoint<Complex>> out;
  if constexpr (is_exact_v<K>) {
    if (f.degree() == 1) return out;
    for (const auto& r : roots_with_multiplicities(critical_value_form(f))) out.push_back(to_float(r.point));
  } else {
    for (const auto& g : critical_groups(f, cfg)) out.push_back(g.value);
  }
  return out;
}

template <Scalar K>
Divisor sigma_divisor(const RationalMap<K>& f, const NumericConfig& cfg) {
  if (f.degree() < 1) throw InvalidInput("Sigma is defined for maps of degree at least 1");
  if constexpr (is_exact_v<K>) {
    return divisor_of(sigma_form_exact(f, cfg));
  } else {
    const auto groups = critical_groups(f, cfg);
    std::vector<DivisorEntry> out;
    if (cfg.reading == SigmaReading::CriticalPointsOnly) {
      for (const auto& g : groups) {
        for (const auto& c : g.points) out.push_back({c.point, c.wronskian_multiplicity + 1});
      }
      return Divisor(std::move(out));
    }
    for (const auto& g : groups) {
      const Divisor fiber = preimage_divisor(f, g.value, cfg);
      // Each critical point must sit in its fiber with order W-multiplicity + 1.
      for (const auto& c : g.points) {
        const auto it = std::min_element(fiber.entries().begin(), fiber.entries().end(),
                                         [&](const DivisorEntry& a, const DivisorEntry& b) {
                                           return chordal_distance(a.point, c.point) <
                                                  chordal_distance(b.point, c.point);
                                         });
        if (chordal_distance(it->point, c.point) > cfg.match_radius() ||
            it->multiplicity != c.wronskian_multiplicity + 1) {
          throw NumericalFailure("fiber multiplicity " + std::to_string(it->multiplicity) +
                                 " disagrees with Wronskian multiplicity " +
                                 std::to_string(c.wronskian_multiplicity));
        }
      }
      out.insert(out.end(), fiber.entries().begin(), fiber.entries().end());
    }
    return Divisor(std::move(out));
  }
}

StabilityWitness is_tau_stable(const Divisor& d, Involution tau, const NumericConfig& cfg) {
  const int n = static_cast<int>(d.size());
  StabilityWitness w;
  if (n == 0) return w;

  constexpr double kForbidden = 1e6;
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, kForbidden));
  std::vector<bool> has_partner(n, false);
  for (int i = 0; i < n; ++i) {
    const auto image = apply_involution(tau, d[i].point);
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    for (int j = 0; j < n; ++j) {
      const double dist = chordal_distance(image, d[j].point);
      if (dist < best) {
        second = best;
        best = dist;
      } else if (dist < second) {
        second = dist;
      }
      if (dist < cfg.match_radius() && d[j].multiplicity == d[i].multiplicity) {
        cost[i][j] = dist;
        has_partner[i] = true;
      }
    }
    if (second < cfg.match_radius() && second < 2 * best) {
      throw NumericalFailure("two divisor points are candidate partners of one involution image");
    }
  }

  w.matching = optimal_assignment(cost);
  std::vector<int> failing;
  for (int i = 0; i < n; ++i) {
    if (!has_partner[i]) failing.push_back(i);
  }
  if (failing.empty()) {
    for (int i = 0; i < n; ++i) {
      if (cost[i][w.matching[i]] >= kForbidden) failing.push_back(i);
    }
  }
  if (failing.empty()) return w;

  // Report the failing entry of largest multiplicity, first in canonical order.
  int pick = failing.front();
  for (int i : failing) {
    if (d[i].multiplicity > d[pick].multiplicity) pick = i;
  }
  w.stable = false;
  w.matching.clear();
  w.failure = pick;
  w.failure_entry = d[pick];
  return w;
}

template <Scalar K>
BinaryForm<K> composed(const BinaryForm<K>& g, const BinaryForm<K>& p, const BinaryForm<K>& q) {
  if (p.degree() != q.degree()) throw InvalidInput("composition needs forms of one degree");
  const int m = g.degree();
  std::vector<BinaryForm<K>> pp{BinaryForm<K>::constant(K(1))}, qp{BinaryForm<K>::constant(K(1))};
  for (int k = 1; k <= m; ++k) {
    pp.push_back(pp.back() * p);
    qp.push_back(qp.back() * q);
  }
  BinaryForm<K> out = BinaryForm<K>::zero(m * p.degree());
  for (int k = 0; k <= m; ++k) {
    if (is_zero(g[k])) continue;
    out += (pp[k] * qp[m - k]).scaled(g[k]);
  }
  return out;
}

QForm critical_value_form(const RationalMap<GQ>& f) {
  if (f.degree() < 1) throw InvalidInput("a constant map has no critical values");
  const QForm w = wronskian(f);
  const int n = w.degree();
  // V(t, 1) at t = 0..n, then Newton interpolation.
  std::vector<GQ> xs, ys;
  for (int t = 0; t <= n; ++t) {
    const GQ a(t);
    xs.push_back(a);
    ys.push_back(resultant(f.numerator() - f.denominator().scaled(a), w));
  }
  for (int level = 1; level <= n; ++level) {
    for (int i = n; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  }
  // Newton form to monomial coefficients, Horner from the top.
  std::vector<GQ> c(n + 1, GQ(0));
  c[0] = ys[n];
  for (int i = n - 1; i >= 0; --i) {
    // c <- c * (t - xs[i]) + ys[i]
    std::vector<GQ> next(n + 1, GQ(0));
    for (int k = 0; k < n; ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * xs[i];
    }
    next[0] += ys[i];
    c = std::move(next);
  }
  return QForm(std::move(c));
}

QForm sigma_form_exact(const RationalMap<GQ>& f, const NumericConfig& cfg) {
  if (f.degree() < 1) throw InvalidInput("Sigma is defined for maps of degree at least 1");
  if (f.degree() == 1) return QForm::constant(GQ(1));
  if (cfg.reading == SigmaReading::CriticalPointsOnly) {
    const QForm w = wronskian(f);
    return normalized(w * squarefree_part(w));
  }
  const QForm v = squarefree_part(critical_value_form(f));
  return normalized(composed(v, f.numerator(), f.denominator()));
}

bool sigma_form_stable(const QForm& t, Involution tau) { return proportional(t, transported(t, tau)); }

Divisor divisor_of(const QForm& t) {
  if (t.degree() == 0) return Divisor();
  return from_roots(roots_with_multiplicities(t));
}

#define REALFN_INSTANTIATE(K)                                                                               \
  template Divisor preimage_divisor(const RationalMap<K>&, const SpherePoint<K>&, const NumericConfig&);    \
  template std::vector<SpherePoint<Complex>> critical_values(const RationalMap<K>&, const NumericConfig&);  \
  template Divisor sigma_divisor(const RationalMap<K>&, const NumericConfig&);                              \
  template BinaryForm<K> composed(const BinaryForm<K>&, const BinaryForm<K>&, const BinaryForm<K>&);

REALFN_INSTANTIATE(GaussianRational)
REALFN_INSTANTIATE(Complex)

#undef REALFN_INSTANTIATE

}  // namespace realfn
