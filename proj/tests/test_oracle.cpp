#include <algorithm>

#include "doctest.h"
#include "orefrac/braid_monoid.hpp"
#include "orefrac/cyclic_monoid.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/oracle.hpp"
#include "orefrac/vec_monoid.hpp"

using namespace orefrac;

TEST_CASE("oracle: enumeration") {
  const auto cyclic = CyclicMonoid::create(6);
  const auto closure = enumerate_elements(*cyclic);
  CHECK(closure.size() == 6);
  CHECK(std::is_sorted(closure.begin(), closure.end()));
  CHECK(oracle_units(*cyclic).size() == 6);

  const auto vec = VecMonoid::create(2);
  OracleOptions upto3;
  upto3.max_word_length = 3;
  CHECK(enumerate_elements(*vec, upto3).size() == 10);  // C(3+2,2)

  const auto braid = BraidMonoid::create(3);
  CHECK(oracle_units(*braid, upto3) == std::vector<Element>{braid->one()});
}

TEST_CASE("oracle: right multiples") {
  const auto klein = KleinMonoid::create();
  OracleOptions upto3;
  upto3.max_word_length = 3;
  const Element x = klein->generator(0);
  const auto multiples = right_multiples_up_to(x, 3, upto3);
  CHECK(multiples.size() == 6);  // x, D, xy, Dx, Dy, xyx
  for (const Element& c : multiples) CHECK(klein->left_divides(x, c));
  CHECK(std::binary_search(multiples.begin(), multiples.end(),
                           klein->delta()));
}

TEST_CASE("oracle: minimal common multiples and lcm sets") {
  const auto b3 = BraidMonoid::create(3);
  const Element s1 = b3->generator(0);
  const Element s2 = b3->generator(1);
  const auto minimal = minimal_common_multiples(s1, s2, {});
  REQUIRE(minimal.size() == 1);
  CHECK(minimal.front() == b3->delta());
  CHECK(lcm_set(s1, s2, {}) == std::vector<Element>{b3->delta()});
  CHECK(lcm_set_matches_units(s1, s2, {}));

  const auto cyclic = CyclicMonoid::create(6);
  const auto set =
      lcm_set(cyclic->from_residue(2), cyclic->from_residue(3), {});
  CHECK(set.size() == 6);  // every residue is an lcm, all unit-related
  CHECK(lcm_set_matches_units(cyclic->from_residue(2),
                              cyclic->from_residue(3), {}));

  CHECK_THROWS_AS(
      minimal_common_multiples(cyclic->from_residue(1),
                               cyclic->from_residue(2), {}),
      DomainError);  // layered growth needs a grading
}

TEST_CASE("oracle: bounded left quotients") {
  const auto b3 = BraidMonoid::create(3);
  const Element s1 = b3->generator(0);
  const Element s2 = b3->generator(1);
  const auto quotient = bfs_left_quotient(s1, b3->delta(), {});
  REQUIRE(quotient.has_value());
  CHECK(*quotient == b3->element_from_word({1, 0}));
  CHECK_FALSE(bfs_left_quotient(b3->mul(s2, s2), b3->delta(), {}).has_value());
}

TEST_CASE("oracle: bounds fail loudly") {
  const auto b3 = BraidMonoid::create(3);
  OracleOptions tight;
  tight.max_word_length = 4;
  const Element big = b3->mul(b3->delta(), b3->delta());  // length 6
  CHECK_THROWS_AS(minimal_common_multiples(big, b3->generator(0), tight),
                  SearchBoundExceeded);

  OracleOptions tiny;
  tiny.max_word_length = 6;
  tiny.max_elements = 3;
  CHECK_THROWS_AS(enumerate_elements(*b3, tiny), SearchBoundExceeded);
}
