#pragma once

#include <cstdint>
#include <memory>

#include "orefrac/monoid.hpp"
#include "orefrac/words.hpp"

namespace orefrac {

/// The monoid K+ = <x, y | x^2 = y^2>+. Writing D = x^2 = y^2, D is
/// central (xD = x^3 = Dx and likewise for y), so every element has a
/// unique normal form D^d * t with t a strictly alternating word in x, y.
/// The code is (d, start, length) with start 0 = empty, 1 = x, 2 = y.
///
/// Its group of fractions is the closing torsion-free example in which
/// x^2 = y^2 holds yet x and y are not conjugate, certified through the
/// abelianization Z (+) Z/2.
class KleinMonoid final : public Monoid {
public:
  static std::shared_ptr<const KleinMonoid> create();

  std::string name() const override;
  MonoidCapabilities capabilities() const override;
  std::optional<Element> try_right_cancel(const Element& c,
                                          const Element& b) const override;
  std::size_t canonical_length(const Element& a) const override;
  std::string letter_name(std::size_t index) const override;
  std::string render(const Element& a) const override;
  std::vector<std::size_t> canonical_word(const Element& a) const override;

  /// D^delta_power times the alternating word of the given length whose
  /// first letter is x (start 1) or y (start 2); start 0 means empty.
  Element from_parts(std::uint64_t delta_power, std::uint64_t start,
                     std::uint64_t length) const;
  Element delta() const { return from_parts(1, 0, 0); }

  std::uint64_t delta_power(const Element& a) const;
  std::uint64_t tail_start(const Element& a) const;
  std::uint64_t tail_length(const Element& a) const;

protected:
  Code one_code() const override;
  Code generator_code(std::size_t index) const override;
  Code mul_codes(const Code& a, const Code& b) const override;
  std::optional<Code> left_cancel_codes(const Code& a,
                                        const Code& c) const override;
  LcmTriple lcm_codes(const Code& a, const Code& b) const override;

private:
  KleinMonoid() = default;
};

/// Image in the abelianization of the group of K+. Presented by the
/// relation matrix (2 -2) on two generators, the abelianization is
/// Z (+) Z/2 with x -> (1, 0) and y -> (1, 1).
struct AbelianImage {
  std::int64_t degree = 0;  // signed total letter count
  int parity = 0;           // signed y-letter count mod 2

  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

std::string render_abelian_image(const AbelianImage& image);

/// Letters index the Klein generators: 0 = x, 1 = y.
AbelianImage abelianize(const std::vector<SignedLetter>& word);

enum class ConjugacyVerdict { NonConjugate, Inconclusive };

/// Conjugation acts trivially on the abelianization, so distinct images
/// certify non-conjugacy. Equal images prove nothing; the verdict never
/// claims conjugacy.
struct ConjugacyReport {
  ConjugacyVerdict verdict = ConjugacyVerdict::Inconclusive;
  AbelianImage left;
  AbelianImage right;
};

ConjugacyReport certify_nonconjugate(const std::vector<SignedLetter>& a,
                                     const std::vector<SignedLetter>& b);

}  // namespace orefrac
