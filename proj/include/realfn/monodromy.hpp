#pragma once

#include <vector>

#include "realfn/errors.hpp"

namespace realfn {

/// Permutation of {0..n-1} as its image array. Composition follows maps:
/// (a * b)(x) = a(b(x)).
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// From disjoint cycles over {0..n-1}.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
/// Nontrivial cycles, each starting at its smallest element, ordered by it.
std::vector<std::vector<int>> to_cycles(const Permutation& p);
/// Cycle lengths (fixed points included), in decreasing order.
std::vector<int> cycle_type(const Permutation& p);

enum class ConstellationError { NotPermutation, NonIdentityProduct, Intransitive };

class InvalidConstellation : public InvalidInput {
 public:
  InvalidConstellation(ConstellationError kind, const std::string& what) : InvalidInput(what), kind_(kind) {}
  ConstellationError kind() const { return kind_; }

 private:
  ConstellationError kind_;
};

struct Constellation {
  int degree = 1;
  std::vector<Permutation> sigma;
};

/// One cycle type per branch point.
using Passport = std::vector<std::vector<int>>;

/// Partition of {0..n-1} into blocks of one size; blocks are sorted and
/// ordered by their smallest element.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
};

/// A word in the generators: entry k > 0 is sigma_k (1-based), k < 0 its
/// inverse. [a, b] evaluates to sigma_a * sigma_b.
using Word = std::vector<int>;

/// Throws InvalidConstellation unless every sigma is a permutation of the
/// degree, the product sigma_1 * ... * sigma_k is the identity, and the
/// generated group is transitive.
void validate(const Constellation& c);

/// From 2 - 2g = 2n - sum over cycles of (length - 1).
int genus(const Constellation& c);

Passport passport(const Constellation& c);

/// pairing[j] is the branch index paired with j (0-based); must be an
/// involution.
bool passport_stability(const Passport& p, const std::vector<int>& pairing);
bool passport_stability(const Constellation& c, const std::vector<int>& pairing);

Permutation evaluate_word(const Constellation& c, const Word& w);

/// Generators of the stabilizer of `point` (Schreier generators).
std::vector<Permutation> stabilizer_generators(const Constellation& c, int point);

/// Block of `basepoint` = its orbit under <Stab(basepoint), extra words>,
/// with the block system of its translates.
BlockSystem block_closure(const Constellation& c, int basepoint, const std::vector<Word>& extra_words);

/// True iff every generator maps blocks onto blocks.
bool preserves_blocks(const Constellation& c, const BlockSystem& b);

/// Induced action on blocks; block i of B is point i of the quotient.
Constellation quotient_constellation(const Constellation& c, const BlockSystem& b);

}  // namespace realfn
