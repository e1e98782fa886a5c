#include "orefrac/serialize.hpp"

#include "orefrac/braid_monoid.hpp"

namespace orefrac {

namespace {

using nlohmann::json;

// nlohmann's own errors surface as ParseError like every other bad input.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json element_to_json(const Element& a) {
  const Monoid& m = a.monoid();
  json j;
  j["monoid"] = m.name();
  j["render"] = m.render(a);
  json word = json::array();
  for (std::size_t letter : m.canonical_word(a))
    word.push_back(m.letter_name(letter));
  j["word"] = std::move(word);
  if (const auto* braid = dynamic_cast<const BraidMonoid*>(&m)) {
    json factors = json::array();
    for (const auto& f : braid->factors(a)) {
      json perm = json::array();
      for (std::size_t image : f) perm.push_back(image + 1);
      factors.push_back(std::move(perm));
    }
    j["factors"] = std::move(factors);
  }
  return j;
}

Element element_from_json(const std::shared_ptr<const Monoid>& m,
                          const json& j) {
  return guarded("element", [&] {
    if (j.contains("monoid") && j.at("monoid").get<std::string>() != m->name())
      throw ParseError("element belongs to monoid " +
                       j.at("monoid").get<std::string>() + ", expected " +
                       m->name());
    std::vector<std::size_t> letters;
    for (const json& token : j.at("word")) {
      auto index = m->parse_letter(token.get<std::string>());
      if (!index)
        throw ParseError(m->name() + ": unknown generator token '" +
                         token.get<std::string>() + "'");
      letters.push_back(*index);
    }
    return m->element_from_word(letters);
  });
}

json certificate_to_json(const LcmCertificate& cert) {
  json j;
  j["left"] = element_to_json(cert.left);
  j["right"] = element_to_json(cert.right);
  j["leftComp"] = element_to_json(cert.left_comp);
  j["rightComp"] = element_to_json(cert.right_comp);
  j["join"] = element_to_json(cert.join);
  return j;
}

LcmCertificate certificate_from_json(const std::shared_ptr<const Monoid>& m,
                                     const json& j) {
  return guarded("certificate", [&] {
    LcmCertificate cert{element_from_json(m, j.at("left")),
                        element_from_json(m, j.at("right")),
                        element_from_json(m, j.at("leftComp")),
                        element_from_json(m, j.at("rightComp")),
                        element_from_json(m, j.at("join"))};
    if (m->mul(cert.left, cert.left_comp) != cert.join ||
        m->mul(cert.right, cert.right_comp) != cert.join)
      throw ParseError("certificate products do not validate");
    return cert;
  });
}

json fraction_to_json(const Fraction& f) {
  json j;
  j["num"] = element_to_json(f.num);
  j["den"] = element_to_json(f.den);
  return j;
}

Fraction fraction_from_json(const std::shared_ptr<const Monoid>& m,
                            const json& j) {
  return guarded("fraction", [&] {
    return make_fraction(element_from_json(m, j.at("num")),
                         element_from_json(m, j.at("den")));
  });
}

json verdict_to_json(const TorsionVerdict& verdict) {
  json j;
  if (verdict.witness) {
    j["verdict"] = "witness";
    j["order"] = verdict.witness->order;
    j["conjugator"] = element_to_json(verdict.witness->conjugator);
    j["torsion"] = element_to_json(verdict.witness->torsion);
  } else {
    j["verdict"] = "none";
    j["pMax"] = verdict.p_max;
  }
  return j;
}

TorsionVerdict verdict_from_json(const std::shared_ptr<const Monoid>& m,
                                 const json& j) {
  return guarded("verdict", [&] {
    const std::string kind = j.at("verdict").get<std::string>();
    if (kind == "none")
      return TorsionVerdict{j.at("pMax").get<std::size_t>(), std::nullopt};
    if (kind != "witness")
      throw ParseError("unknown torsion verdict '" + kind + "'");
    TorsionWitness witness{j.at("order").get<std::size_t>(),
                           element_from_json(m, j.at("conjugator")),
                           element_from_json(m, j.at("torsion"))};
    return TorsionVerdict{0, std::move(witness)};
  });
}

json abelian_image_to_json(const AbelianImage& image) {
  json j;
  j["degree"] = image.degree;
  j["parity"] = image.parity;
  return j;
}

AbelianImage abelian_image_from_json(const json& j) {
  return guarded("abelian image", [&] {
    AbelianImage image{j.at("degree").get<std::int64_t>(),
                       j.at("parity").get<int>()};
    if (image.parity != 0 && image.parity != 1)
      throw ParseError("abelian parity must be 0 or 1");
    return image;
  });
}

json conjugacy_report_to_json(const ConjugacyReport& report) {
  json j;
  j["verdict"] = report.verdict == ConjugacyVerdict::NonConjugate
                     ? "NonConjugate"
                     : "Inconclusive";
  j["left"] = abelian_image_to_json(report.left);
  j["right"] = abelian_image_to_json(report.right);
  return j;
}

ConjugacyReport conjugacy_report_from_json(const json& j) {
  return guarded("conjugacy report", [&] {
    ConjugacyReport report;
    const std::string kind = j.at("verdict").get<std::string>();
    if (kind == "NonConjugate")
      report.verdict = ConjugacyVerdict::NonConjugate;
    else if (kind == "Inconclusive")
      report.verdict = ConjugacyVerdict::Inconclusive;
    else
      throw ParseError("unknown conjugacy verdict '" + kind + "'");
    report.left = abelian_image_from_json(j.at("left"));
    report.right = abelian_image_from_json(j.at("right"));
    return report;
  });
}

}  // namespace orefrac
