#pragma once

#include <memory>
#include <nlohmann/json.hpp>

#include "orefrac/fraction.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/torsion.hpp"

namespace orefrac {

/// JSON forms round-trip: parsing the emitted value under the same monoid
/// instance reproduces the original. Keys are emitted in sorted order, so
/// dumps are byte-stable.

nlohmann::json element_to_json(const Element& a);
Element element_from_json(const std::shared_ptr<const Monoid>& m,
                          const nlohmann::json& j);

nlohmann::json certificate_to_json(const LcmCertificate& cert);
LcmCertificate certificate_from_json(const std::shared_ptr<const Monoid>& m,
                                     const nlohmann::json& j);

nlohmann::json fraction_to_json(const Fraction& f);
Fraction fraction_from_json(const std::shared_ptr<const Monoid>& m,
                            const nlohmann::json& j);

nlohmann::json verdict_to_json(const TorsionVerdict& verdict);
TorsionVerdict verdict_from_json(const std::shared_ptr<const Monoid>& m,
                                 const nlohmann::json& j);

nlohmann::json abelian_image_to_json(const AbelianImage& image);
AbelianImage abelian_image_from_json(const nlohmann::json& j);

nlohmann::json conjugacy_report_to_json(const ConjugacyReport& report);
ConjugacyReport conjugacy_report_from_json(const nlohmann::json& j);

}  // namespace orefrac
