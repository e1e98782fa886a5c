#pragma once

#include <memory>
#include <optional>

#include "orefrac/monoid.hpp"

namespace orefrac {

/// The cyclic group Z/n written additively, viewed as a monoid. Every
/// element is a unit, so right lcm's are maximally non-unique: any residue
/// is a right lcm of any pair. The canonical certificate join is residue 0;
/// constructing with a twist seed instead picks a pseudo-random (but pure
/// and deterministic) unit multiple per argument pair, which exercises the
/// unit-independence of downstream verdicts.
class CyclicMonoid final : public Monoid {
public:
  static std::shared_ptr<const CyclicMonoid> create(
      std::uint64_t modulus, std::optional<std::uint64_t> twist_seed = {});

  std::uint64_t modulus() const { return modulus_; }

  std::string name() const override;
  MonoidCapabilities capabilities() const override;
  bool is_unit(const Element& a) const override;
  std::optional<Element> unit_inverse(const Element& a) const override;
  std::vector<Element> units() const override;
  std::optional<Element> try_right_cancel(const Element& c,
                                          const Element& b) const override;
  std::size_t canonical_length(const Element& a) const override;
  bool is_graded() const override { return false; }
  std::string letter_name(std::size_t index) const override;
  std::string render(const Element& a) const override;
  std::vector<std::size_t> canonical_word(const Element& a) const override;

  Element from_residue(std::uint64_t r) const;

protected:
  Code one_code() const override;
  Code generator_code(std::size_t index) const override;
  Code mul_codes(const Code& a, const Code& b) const override;
  std::optional<Code> left_cancel_codes(const Code& a,
                                        const Code& c) const override;
  LcmTriple lcm_codes(const Code& a, const Code& b) const override;

private:
  CyclicMonoid(std::uint64_t modulus, std::optional<std::uint64_t> twist_seed)
      : modulus_(modulus), twist_seed_(twist_seed) {}

  std::uint64_t join_for(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t modulus_;
  std::optional<std::uint64_t> twist_seed_;
};

}  // namespace orefrac
