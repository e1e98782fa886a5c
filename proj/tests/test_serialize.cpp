#include <memory>
#include <vector>

#include "doctest.h"
#include "orefrac/braid_monoid.hpp"
#include "orefrac/cyclic_monoid.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/sampling.hpp"
#include "orefrac/serialize.hpp"
#include "orefrac/torsion.hpp"
#include "orefrac/vec_monoid.hpp"

using namespace orefrac;

namespace {

std::vector<std::shared_ptr<const Monoid>> instances() {
  return {VecMonoid::create(2), CyclicMonoid::create(6), KleinMonoid::create(),
          BraidMonoid::create(4)};
}

}  // namespace

TEST_CASE("serialize: elements round-trip") {
  for (const auto& m : instances()) {
    CAPTURE(m->name());
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
      const Element a = random_element_up_to(*m, rng, 5);
      const nlohmann::json j = element_to_json(a);
      CHECK(j.at("monoid") == m->name());
      CHECK(element_from_json(m, j) == a);
      // dumps are key-sorted and reproducible
      CHECK(j.dump() == element_to_json(a).dump());
    }
  }
}

TEST_CASE("serialize: braid elements carry their factors") {
  const auto b3 = BraidMonoid::create(3);
  const nlohmann::json j = element_to_json(b3->generator(0));
  REQUIRE(j.contains("factors"));
  CHECK(j.at("factors") == nlohmann::json::parse("[[2,1,3]]"));
  CHECK(j.at("word") == nlohmann::json::parse(R"(["s1"])"));

  const nlohmann::json delta = element_to_json(b3->delta());
  CHECK(delta.at("factors") == nlohmann::json::parse("[[3,2,1]]"));
}

TEST_CASE("serialize: mismatched instances are rejected") {
  const auto klein = KleinMonoid::create();
  const auto braid = BraidMonoid::create(3);
  const nlohmann::json j = element_to_json(klein->generator(0));
  CHECK_THROWS_AS(element_from_json(braid, j), ParseError);
  CHECK_THROWS_AS(element_from_json(klein, nlohmann::json::object()),
                  ParseError);
  nlohmann::json bad = j;
  bad["word"] = nlohmann::json::parse(R"(["q"])");
  CHECK_THROWS_AS(element_from_json(klein, bad), ParseError);
}

TEST_CASE("serialize: certificates validate on parse") {
  const auto b3 = BraidMonoid::create(3);
  const LcmCertificate cert =
      b3->right_lcm(b3->generator(0), b3->generator(1));
  const nlohmann::json j = certificate_to_json(cert);
  const LcmCertificate back = certificate_from_json(b3, j);
  CHECK(back.join == cert.join);
  CHECK(back.left_comp == cert.left_comp);
  CHECK(back.right_comp == cert.right_comp);

  nlohmann::json tampered = j;
  tampered["join"] = element_to_json(b3->generator(0));
  CHECK_THROWS_AS(certificate_from_json(b3, tampered), ParseError);
}

TEST_CASE("serialize: fractions and verdicts round-trip") {
  const auto klein = KleinMonoid::create();
  Rng rng(52);
  for (int t = 0; t < 50; ++t) {
    const Fraction f = random_fraction(*klein, rng, 4);
    const Fraction back = fraction_from_json(klein, fraction_to_json(f));
    CHECK(back.num == f.num);
    CHECK(back.den == f.den);
  }

  const TorsionVerdict none =
      torsion_check(make_fraction(klein->generator(0), klein->generator(1)), 4);
  const nlohmann::json jn = verdict_to_json(none);
  CHECK(jn.at("verdict") == "none");
  CHECK(jn.at("pMax") == 4);
  const TorsionVerdict none_back = verdict_from_json(klein, jn);
  CHECK_FALSE(none_back.witness.has_value());
  CHECK(none_back.p_max == 4);

  const auto cyclic = CyclicMonoid::create(2);
  const TorsionVerdict hit = torsion_check(
      make_fraction(cyclic->from_residue(1), cyclic->from_residue(0)), 2);
  const nlohmann::json jw = verdict_to_json(hit);
  CHECK(jw.at("verdict") == "witness");
  CHECK(jw.at("order") == 2);
  const TorsionVerdict hit_back = verdict_from_json(cyclic, jw);
  REQUIRE(hit_back.witness.has_value());
  CHECK(hit_back.witness->order == 2);
  CHECK(hit_back.witness->torsion == hit.witness->torsion);
  CHECK(hit_back.witness->conjugator == hit.witness->conjugator);

  nlohmann::json bad = jw;
  bad["verdict"] = "maybe";
  CHECK_THROWS_AS(verdict_from_json(cyclic, bad), ParseError);
}

TEST_CASE("serialize: abelian images and conjugacy reports") {
  const AbelianImage image{-3, 1};
  CHECK(abelian_image_from_json(abelian_image_to_json(image)) == image);
  CHECK(abelian_image_to_json(image).dump() == R"({"degree":-3,"parity":1})");
  CHECK_THROWS_AS(abelian_image_from_json(nlohmann::json::parse(
                      R"({"degree":0,"parity":2})")),
                  ParseError);

  const ConjugacyReport report =
      certify_nonconjugate({{0, false}}, {{1, false}});
  const nlohmann::json j = conjugacy_report_to_json(report);
  CHECK(j.at("verdict") == "NonConjugate");
  const ConjugacyReport back = conjugacy_report_from_json(j);
  CHECK(back.verdict == report.verdict);
  CHECK(back.left == report.left);
  CHECK(back.right == report.right);

  nlohmann::json bad = j;
  bad["verdict"] = "Equal";
  CHECK_THROWS_AS(conjugacy_report_from_json(bad), ParseError);
}
