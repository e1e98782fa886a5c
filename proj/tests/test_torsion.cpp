#include <memory>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "orefrac/braid_monoid.hpp"
#include "orefrac/cyclic_monoid.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/sampling.hpp"
#include "orefrac/torsion.hpp"
#include "orefrac/vec_monoid.hpp"

using namespace orefrac;

namespace {

Element monoid_power(const Monoid& m, const Element& a, std::size_t k) {
  Element acc = m.one();
  for (std::size_t i = 0; i < k; ++i) acc = m.mul(acc, a);
  return acc;
}

std::size_t additive_order(std::uint64_t r, std::uint64_t n) {
  return static_cast<std::size_t>(n / std::gcd(r, n));
}

}  // namespace

TEST_CASE("torsion: chains satisfy the certificate identity") {
  const auto b3 = BraidMonoid::create(3);
  const Element s1 = b3->generator(0);
  const Element s2 = b3->generator(1);
  const PairSequence seq = build_pairs(make_fraction(s1, s2), 4);

  REQUIRE(seq.xs.size() == 4);
  CHECK(seq.xs[0] == s1);
  CHECK(seq.ys[0] == s2);
  CHECK(seq.xs[1] == b3->element_from_word({0, 1}));
  CHECK(seq.ys[1] == b3->element_from_word({1, 0}));
  REQUIRE(seq.certs.size() == 3);
  for (std::size_t i = 0; i + 1 < seq.xs.size(); ++i) {
    CHECK(b3->mul(seq.xs[i], seq.ys[i + 1]) == seq.certs[i].join);
    CHECK(b3->mul(seq.ys[i], seq.xs[i + 1]) == seq.certs[i].join);
  }
}

TEST_CASE("torsion: the two-element group alternates") {
  const auto m = CyclicMonoid::create(2);
  const Fraction z = make_fraction(m->from_residue(1), m->from_residue(0));
  const PairSequence seq = build_pairs(z, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(seq.xs[i] == m->from_residue(i % 2 == 0 ? 1 : 0));
    CHECK(seq.ys[i] == m->from_residue(i % 2 == 0 ? 0 : 1));
  }

  const TorsionVerdict verdict = torsion_check(z, 2);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->order == 2);
  CHECK(verdict.witness->conjugator == m->from_residue(1));
  CHECK(verdict.witness->torsion == m->from_residue(1));
}

TEST_CASE("torsion: chain identities hold on random fractions") {
  const std::vector<std::shared_ptr<const Monoid>> monoids = {
      VecMonoid::create(2), CyclicMonoid::create(6), KleinMonoid::create(),
      BraidMonoid::create(3)};
  for (const auto& m : monoids) {
    CAPTURE(m->name());
    Rng rng(41);
    for (int t = 0; t < 30; ++t) {
      const Fraction z = random_fraction(*m, rng, 3);
      const PairSequence seq = build_pairs(z, 8);
      for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t l = 1; l <= 3; ++l) CHECK(check_eq1(seq, k, l));
        CHECK(check_eq2(seq, z, k));
      }
      for (std::size_t k = 1; k <= 6; ++k) CHECK(check_eq3(seq, z, k));
    }
  }
}

TEST_CASE("torsion: the oracle variant of the lcm check agrees") {
  const auto klein = KleinMonoid::create();
  Rng rng(42);
  OracleOptions oracle;
  oracle.max_word_length = 14;
  for (int t = 0; t < 10; ++t) {
    const Fraction z = random_fraction(*klein, rng, 2);
    const PairSequence seq = build_pairs(z, 4);
    for (std::size_t k = 1; k <= 2; ++k)
      for (std::size_t l = 1; l <= 2; ++l)
        CHECK(check_eq1(seq, k, l, &oracle));
  }
}

TEST_CASE("torsion: cyclic groups expose their element orders") {
  for (std::uint64_t n : {2ull, 3ull, 6ull}) {
    const auto m = CyclicMonoid::create(n);
    CAPTURE(n);
    for (std::uint64_t r = 0; r < n; ++r) {
      const Fraction z = make_fraction(m->from_residue(r), m->from_residue(0));
      const TorsionVerdict verdict = torsion_check(z, 6);
      REQUIRE(verdict.witness.has_value());
      const TorsionWitness& w = *verdict.witness;
      CHECK(w.order == additive_order(r, n));
      CHECK(monoid_power(*m, w.torsion, w.order) == m->one());
      // conjugation back to z, as fractions
      const Fraction conj = make_fraction(w.conjugator, m->one());
      const Fraction t = make_fraction(w.torsion, m->one());
      CHECK(fraction_eq(
          fraction_mul(fraction_mul(conj, t), fraction_inv(conj)), z));
    }
  }
}

TEST_CASE("torsion: verdicts ignore the lcm twist") {
  const auto plain = CyclicMonoid::create(6);
  for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
    const auto twisted = CyclicMonoid::create(6, seed);
    CAPTURE(seed);
    for (std::uint64_t num = 0; num < 6; ++num) {
      for (std::uint64_t den = 0; den < 6; ++den) {
        const TorsionVerdict a = torsion_check(
            make_fraction(plain->from_residue(num), plain->from_residue(den)),
            6);
        const TorsionVerdict b = torsion_check(
            make_fraction(twisted->from_residue(num),
                          twisted->from_residue(den)),
            6);
        REQUIRE(a.witness.has_value());
        REQUIRE(b.witness.has_value());
        CHECK(a.witness->order == b.witness->order);
      }
    }
  }
}

TEST_CASE("torsion: fraction groups of graded instances are torsion free") {
  const std::vector<std::shared_ptr<const Monoid>> monoids = {
      VecMonoid::create(2), KleinMonoid::create(), BraidMonoid::create(3),
      BraidMonoid::create(4)};
  for (const auto& m : monoids) {
    CAPTURE(m->name());
    Rng rng(43);
    int nontrivial = 0;
    while (nontrivial < 60) {
      const Fraction z = random_fraction(*m, rng, 3);
      if (fraction_is_identity(z)) continue;
      ++nontrivial;
      const TorsionVerdict verdict = torsion_check(z, 4);
      CHECK_FALSE(verdict.witness.has_value());
      CHECK(verdict.p_max == 4);
    }
  }
}

TEST_CASE("torsion: the identity fraction is trivial torsion") {
  const auto klein = KleinMonoid::create();
  const TorsionVerdict verdict =
      torsion_check(identity_fraction(*klein), 3);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->order == 1);
  CHECK(verdict.witness->torsion == klein->one());
}

TEST_CASE("torsion: guard rails") {
  const auto b3 = BraidMonoid::create(3);
  const Fraction z = make_fraction(b3->generator(0), b3->generator(1));
  const PairSequence seq = build_pairs(z, 2);

  CHECK_THROWS_AS(check_eq1(seq, 2, 1), InsufficientPairs);
  CHECK_THROWS_AS(check_eq2(seq, z, 2), InsufficientPairs);
  CHECK_THROWS_AS(check_eq3(seq, z, 3), InsufficientPairs);
  CHECK_THROWS_AS(check_eq1(seq, 0, 1), DomainError);
  CHECK_THROWS_AS(check_eq1(seq, 1, 0), DomainError);
  CHECK_THROWS_AS(build_pairs(z, 0), DomainError);
  CHECK_THROWS_AS(torsion_check(z, 0), DomainError);
}
