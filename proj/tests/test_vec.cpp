#include "doctest.h"
#include "orefrac/sampling.hpp"
#include "orefrac/vec_monoid.hpp"

using namespace orefrac;

TEST_CASE("vec: componentwise arithmetic and rendering") {
  const auto m = VecMonoid::create(3);
  CHECK(m->name() == "nk:3");
  CHECK(m->generator_count() == 3);

  const Element a = m->from_coords({2, 1, 0});
  const Element b = m->from_coords({0, 3, 1});
  CHECK(m->mul(a, b) == m->from_coords({2, 4, 1}));
  CHECK(m->mul(a, b) == m->mul(b, a));
  CHECK(m->render(a) == "(2,1,0)");
  CHECK(m->render(m->one()) == "(0,0,0)");
  CHECK(m->canonical_length(a) == 3);
  CHECK(m->canonical_word(a) == std::vector<std::size_t>{0, 0, 1});
  CHECK(m->element_from_word({0, 0, 1}) == a);
}

TEST_CASE("vec: divisibility is the componentwise order") {
  const auto m = VecMonoid::create(2);
  const Element a = m->from_coords({1, 2});
  const Element c = m->from_coords({3, 2});
  CHECK(m->left_divides(a, c));
  CHECK(m->left_cancel(a, c) == m->from_coords({2, 0}));
  CHECK_FALSE(m->left_divides(c, a));
  CHECK_THROWS_AS(m->left_cancel(c, a), NotLeftMultiple);
  CHECK_FALSE(m->try_left_cancel(m->from_coords({0, 3}), c).has_value());
}

TEST_CASE("vec: right lcm is the componentwise max") {
  const auto m = VecMonoid::create(3);
  const Element a = m->from_coords({2, 0, 1});
  const Element b = m->from_coords({1, 3, 1});
  const LcmCertificate cert = m->right_lcm(a, b);
  CHECK(cert.join == m->from_coords({2, 3, 1}));
  CHECK(m->mul(a, cert.left_comp) == cert.join);
  CHECK(m->mul(b, cert.right_comp) == cert.join);
  CHECK(cert.left_comp == m->from_coords({0, 3, 0}));
  CHECK(cert.right_comp == m->from_coords({1, 0, 0}));
}

TEST_CASE("vec: units are trivial and instances are distinct") {
  const auto m = VecMonoid::create(2);
  CHECK(m->is_unit(m->one()));
  CHECK_FALSE(m->is_unit(m->generator(0)));
  CHECK(m->units() == std::vector<Element>{m->one()});
  CHECK(m->is_graded());

  CHECK_THROWS_AS(m->generator(2), DomainError);
  CHECK_THROWS_AS(m->from_coords({1, 2, 3}), DomainError);
  CHECK_THROWS_AS(VecMonoid::create(0), DomainError);

  const auto other = VecMonoid::create(2);
  CHECK_THROWS_AS(m->mul(m->one(), other->one()), DomainError);
}

TEST_CASE("vec: sampled algebra laws") {
  const auto m = VecMonoid::create(4);
  Rng rng(17);
  for (int t = 0; t < 500; ++t) {
    const Element a = random_element_up_to(*m, rng, 5);
    const Element b = random_element_up_to(*m, rng, 5);
    const Element c = random_element_up_to(*m, rng, 5);
    CHECK(m->mul(m->mul(a, b), c) == m->mul(a, m->mul(b, c)));
    CHECK(m->left_cancel(a, m->mul(a, b)) == b);
  }
}
