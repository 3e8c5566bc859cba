#include <doctest.h>

#include <algorithm>
#include <random>

#include "realfn/monodromy.hpp"

using namespace realfn;

namespace {

// 1-based cycles, as written by hand.
Permutation cyc(int n, std::vector<std::vector<int>> cycles) {
  for (auto& c : cycles) {
    for (int& x : c) --x;
  }
  return from_cycles(n, cycles);
}

Constellation z2() { return {2, {cyc(2, {{1, 2}}), cyc(2, {{1, 2}})}}; }
Constellation z4() { return {4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 4, 3, 2}})}}; }

ConstellationError error_of(const Constellation& c) {
  try {
    validate(c);
  } catch (const InvalidConstellation& e) {
    return e.kind();
  }
  FAIL("constellation unexpectedly valid");
  return ConstellationError::NotPermutation;
}

}  // namespace

TEST_CASE("permutation helpers") {
  const Permutation a = cyc(3, {{1, 2}});
  const Permutation b = cyc(3, {{1, 3}});
  // (12)(13): 1 -> 3, 3 -> 2, 2 -> 1
  CHECK(compose(a, b) == cyc(3, {{1, 3, 2}}));
  CHECK(compose(a, inverse(a)) == identity_permutation(3));
  CHECK(to_cycles(cyc(5, {{3, 5}, {1, 4, 2}})) == std::vector<std::vector<int>>{{0, 3, 1}, {2, 4}});
  CHECK(cycle_type(cyc(5, {{3, 5}, {1, 4, 2}})) == std::vector<int>{3, 2});
  CHECK(cycle_type(identity_permutation(3)) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(cyc(3, {{1, 2}, {2, 3}}), InvalidConstellation);
}

TEST_CASE("validate examples") {
  CHECK_NOTHROW(validate(z2()));
  CHECK(error_of({2, {cyc(2, {{1, 2}}), identity_permutation(2)}}) == ConstellationError::NonIdentityProduct);
  CHECK(error_of({4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2}}), cyc(4, {{3, 4}}), cyc(4, {{3, 4}})}}) ==
        ConstellationError::Intransitive);
  CHECK(error_of({3, {Permutation{0, 0, 1}}}) == ConstellationError::NotPermutation);
}

TEST_CASE("genus examples") {
  CHECK(genus(z2()) == 0);
  const Permutation t = cyc(2, {{1, 2}});
  CHECK(genus({2, {t, t, t, t}}) == 1);
  CHECK(genus(z4()) == 0);

  SUBCASE("every constellation with the passport of z^3 - 3z has genus 0") {
    // Enumerate sigma_1, sigma_2 transpositions of S_3, sigma_3 = (sigma_1 sigma_2)^-1
    // and keep those where sigma_3 is a 3-cycle.
    const std::vector<Permutation> transpositions{cyc(3, {{1, 2}}), cyc(3, {{1, 3}}), cyc(3, {{2, 3}})};
    int found = 0;
    for (const auto& s1 : transpositions) {
      for (const auto& s2 : transpositions) {
        const Permutation s3 = inverse(compose(s1, s2));
        if (cycle_type(s3) != std::vector<int>{3}) continue;
        const Constellation c{3, {s1, s2, s3}};
        CHECK(passport(c) == Passport{{2, 1}, {2, 1}, {3}});
        CHECK(genus(c) == 0);
        ++found;
      }
    }
    CHECK(found == 6);
  }
}

TEST_CASE("passport_stability examples") {
  CHECK(passport_stability(z2(), {1, 0}));
  CHECK(passport_stability(Passport{{2, 1}, {2, 1}, {3}}, {1, 0, 2}));
  CHECK_FALSE(passport_stability(Passport{{2, 1}, {3}, {2, 1}}, {1, 0, 2}));
  CHECK_THROWS_AS(passport_stability(Passport{{2}, {2}, {2}}, {1, 2, 0}), InvalidInput);

  SUBCASE("the identity pairing is always stable") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
      Permutation a = identity_permutation(6);
      std::shuffle(a.begin(), a.end(), rng);
      const Constellation c{6, {a, inverse(a)}};
      CHECK(passport_stability(c, {0, 1}));
    }
  }
  SUBCASE("conj pairing of the z^3 - 3z branch points") {
    // Branch values -2, 2, inf are all real, so conj pairs each with itself.
    const Constellation c{3, {cyc(3, {{1, 2}}), cyc(3, {{1, 3}}), cyc(3, {{1, 2, 3}})}};
    CHECK(passport_stability(c, {0, 1, 2}));
  }
}

TEST_CASE("block_closure and quotient examples") {
  const Constellation c = z4();
  // sigma_0^2 = (13)(24); the stabilizer of a point in a cyclic group is trivial
  const BlockSystem b = block_closure(c, 0, {{1, 1}});
  CHECK(b.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(preserves_blocks(c, b));
  const Constellation q = quotient_constellation(c, b);
  CHECK(q.degree == 2);
  CHECK(q.sigma == z2().sigma);
  CHECK(c.degree == b.block_size() * q.degree);
  CHECK(genus(q) == 0);

  CHECK(stabilizer_generators(c, 0).empty());
  const BlockSystem singletons = block_closure(c, 0, {});
  CHECK(singletons.blocks.size() == 4);
  const Constellation same = quotient_constellation(c, singletons);
  CHECK(same.sigma == c.sigma);

  const BlockSystem whole = block_closure(c, 0, {{1}});
  CHECK(whole.blocks == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  const Constellation trivial = quotient_constellation(c, whole);
  CHECK(trivial.degree == 1);
  CHECK(genus(trivial) == 0);

  CHECK_THROWS_AS(block_closure(c, 0, {{3}}), InvalidInput);
  CHECK_THROWS_AS(block_closure(c, 0, {{0}}), InvalidInput);
  CHECK_THROWS_AS(quotient_constellation(c, BlockSystem{{{0, 1}, {2, 3}}}), InvalidInput);
}

TEST_CASE("property: block closure is generator-stable and Riemann-Hurwitz holds at both levels") {
  std::mt19937_64 rng(8);
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    // sigma_1, sigma_2 random, sigma_3 closes the product.
    Permutation a = identity_permutation(n), b = identity_permutation(n);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Constellation c{n, {a, b, inverse(compose(a, b))}};
    try {
      validate(c);
    } catch (const InvalidConstellation&) {
      continue;
    }
    std::uniform_int_distribution<int> letter(1, 3);
    std::vector<Word> words;
    if (trial % 2) words.push_back({letter(rng), letter(rng)});
    const BlockSystem blocks = block_closure(c, 0, words);
    CHECK(preserves_blocks(c, blocks));
    const Constellation q = quotient_constellation(c, blocks);
    CHECK_NOTHROW(validate(q));
    CHECK(n == blocks.block_size() * q.degree);
    CHECK(genus(c) >= 0);
    CHECK(genus(q) >= 0);
    CHECK(genus(q) <= genus(c));
    if (q.degree > 1 && blocks.block_size() > 1) ++nontrivial;
  }
  CHECK(nontrivial > 0);
}
