#include "realfn/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace realfn {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("composing permutations of different degree");
  Permutation out(a.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
  return out;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity_permutation(n);
  std::vector<bool> seen(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int x = cycle[i];
      if (x < 0 || x >= n) throw InvalidConstellation(ConstellationError::NotPermutation, "cycle entry out of range");
      if (seen[x]) throw InvalidConstellation(ConstellationError::NotPermutation, "cycles are not disjoint");
      seen[x] = true;
      p[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

std::vector<std::vector<int>> to_cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(start); !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = static_cast<int>(start); !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

bool is_permutation_of(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

// Orbit of `start` under the generators, with the transversal: u[x] maps
// start to x (empty for points outside the orbit).
std::vector<Permutation> transversal(const std::vector<Permutation>& gens, int n, int start) {
  std::vector<Permutation> u(n);
  u[start] = identity_permutation(n);
  std::vector<int> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (const auto& g : gens) {
      const int y = g[x];
      if (!u[y].empty()) continue;
      u[y] = compose(g, u[x]);
      queue.push_back(y);
    }
  }
  return u;
}

std::vector<int> orbit(const std::vector<Permutation>& gens, int n, int start) {
  std::vector<int> out;
  const auto u = transversal(gens, n, start);
  for (int x = 0; x < n; ++x) {
    if (!u[x].empty()) out.push_back(x);
  }
  return out;
}

void check_basepoint(const Constellation& c, int point) {
  if (point < 0 || point >= c.degree) throw InvalidInput("basepoint out of range");
}

}  // namespace

void validate(const Constellation& c) {
  if (c.degree < 1) throw InvalidConstellation(ConstellationError::NotPermutation, "degree must be positive");
  Permutation product = identity_permutation(c.degree);
  for (std::size_t j = 0; j < c.sigma.size(); ++j) {
    if (!is_permutation_of(c.sigma[j], c.degree)) {
      throw InvalidConstellation(ConstellationError::NotPermutation,
                                 "sigma_" + std::to_string(j + 1) + " is not a permutation of the degree");
    }
    product = compose(product, c.sigma[j]);
  }
  if (product != identity_permutation(c.degree)) {
    throw InvalidConstellation(ConstellationError::NonIdentityProduct, "product of the permutations is not the identity");
  }
  if (static_cast<int>(orbit(c.sigma, c.degree, 0).size()) != c.degree) {
    throw InvalidConstellation(ConstellationError::Intransitive, "the permutations do not act transitively");
  }
}

int genus(const Constellation& c) {
  validate(c);
  int ramification = 0;
  for (const auto& s : c.sigma) {
    for (int len : cycle_type(s)) ramification += len - 1;
  }
  const int twice_g = 2 - 2 * c.degree + ramification;
  if (twice_g < 0 || twice_g % 2 != 0) {
    throw InvalidInput("Riemann-Hurwitz gives 2g = " + std::to_string(twice_g));
  }
  return twice_g / 2;
}

Passport passport(const Constellation& c) {
  Passport p;
  for (const auto& s : c.sigma) p.push_back(cycle_type(s));
  return p;
}

bool passport_stability(const Passport& p, const std::vector<int>& pairing) {
  const int k = static_cast<int>(p.size());
  if (static_cast<int>(pairing.size()) != k) throw InvalidInput("pairing must have one entry per branch point");
  for (int j = 0; j < k; ++j) {
    if (pairing[j] < 0 || pairing[j] >= k || pairing[pairing[j]] != j) {
      throw InvalidInput("pairing of branch points is not an involution");
    }
  }
  for (int j = 0; j < k; ++j) {
    if (p[j] != p[pairing[j]]) return false;
  }
  return true;
}

bool passport_stability(const Constellation& c, const std::vector<int>& pairing) {
  return passport_stability(passport(c), pairing);
}

Permutation evaluate_word(const Constellation& c, const Word& w) {
  Permutation out = identity_permutation(c.degree);
  for (int letter : w) {
    const int index = std::abs(letter) - 1;
    if (letter == 0 || index >= static_cast<int>(c.sigma.size())) {
      throw InvalidInput("word letter " + std::to_string(letter) + " names no generator");
    }
    out = compose(out, letter > 0 ? c.sigma[index] : inverse(c.sigma[index]));
  }
  return out;
}

std::vector<Permutation> stabilizer_generators(const Constellation& c, int point) {
  check_basepoint(c, point);
  const auto u = transversal(c.sigma, c.degree, point);
  std::vector<Permutation> out;
  const Permutation id = identity_permutation(c.degree);
  for (int x = 0; x < c.degree; ++x) {
    if (u[x].empty()) continue;
    for (const auto& s : c.sigma) {
      // u_{s(x)}^-1 s u_x fixes the point.
      Permutation g = compose(inverse(u[s[x]]), compose(s, u[x]));
      if (g != id && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    }
  }
  return out;
}

BlockSystem block_closure(const Constellation& c, int basepoint, const std::vector<Word>& extra_words) {
  validate(c);
  check_basepoint(c, basepoint);
  std::vector<Permutation> h = stabilizer_generators(c, basepoint);
  for (const auto& w : extra_words) h.push_back(evaluate_word(c, w));
  const std::vector<int> block = orbit(h, c.degree, basepoint);

  const auto u = transversal(c.sigma, c.degree, basepoint);
  BlockSystem out;
  std::vector<bool> covered(c.degree, false);
  for (int x = 0; x < c.degree; ++x) {
    if (covered[x]) continue;
    std::vector<int> image;
    for (int y : block) image.push_back(u[x][y]);
    std::sort(image.begin(), image.end());
    for (int y : image) {
      if (covered[y]) throw InvalidInput("translates of the block overlap");
      covered[y] = true;
    }
    out.blocks.push_back(std::move(image));
  }
  if (!preserves_blocks(c, out)) throw InvalidInput("block closure produced a non-invariant partition");
  return out;
}

bool preserves_blocks(const Constellation& c, const BlockSystem& b) {
  std::vector<int> owner(c.degree, -1);
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    for (int x : b.blocks[i]) {
      if (x < 0 || x >= c.degree || owner[x] != -1) return false;
      owner[x] = static_cast<int>(i);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  for (const auto& s : c.sigma) {
    for (const auto& blk : b.blocks) {
      const int target = owner[s[blk.front()]];
      for (int x : blk) {
        if (owner[s[x]] != target) return false;
      }
    }
  }
  return true;
}

Constellation quotient_constellation(const Constellation& c, const BlockSystem& b) {
  if (!preserves_blocks(c, b)) throw InvalidInput("block system is not preserved by the permutations");
  BlockSystem sorted = b;
  for (auto& blk : sorted.blocks) std::sort(blk.begin(), blk.end());
  std::sort(sorted.blocks.begin(), sorted.blocks.end());
  std::vector<int> owner(c.degree);
  for (std::size_t i = 0; i < sorted.blocks.size(); ++i) {
    for (int x : sorted.blocks[i]) owner[x] = static_cast<int>(i);
  }
  Constellation q;
  q.degree = static_cast<int>(sorted.blocks.size());
  for (const auto& s : c.sigma) {
    Permutation induced(q.degree);
    for (int i = 0; i < q.degree; ++i) induced[i] = owner[s[sorted.blocks[i].front()]];
    q.sigma.push_back(std::move(induced));
  }
  return q;
}

}  // namespace realfn
