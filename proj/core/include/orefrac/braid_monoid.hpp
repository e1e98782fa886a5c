#pragma once

#include <memory>

#include "orefrac/monoid.hpp"
#include "orefrac/reversing.hpp"

namespace orefrac {

/// The positive braid monoid Bn+ presented by s_i s_j s_i = s_j s_i s_j
/// for |i-j| = 1 and s_i s_j = s_j s_i for |i-j| >= 2. Elements are kept
/// in left-greedy normal form: a sequence of non-identity permutation
/// factors (square-free braids, one-line images of where each strand
/// position ends up) in which each factor absorbs as much of its right
/// neighbor as stays square-free. Right lcm's are computed by subword
/// reversing of the generator words.
class BraidMonoid final : public Monoid {
public:
  static std::shared_ptr<const BraidMonoid> create(std::size_t strands);

  std::size_t strands() const { return strands_; }

  std::string name() const override;
  MonoidCapabilities capabilities() const override;
  std::optional<Element> try_right_cancel(const Element& c,
                                          const Element& b) const override;
  std::optional<Element> try_right_gcd(const Element& a,
                                       const Element& b) const override;
  std::size_t canonical_length(const Element& a) const override;
  std::string letter_name(std::size_t index) const override;
  std::string render(const Element& a) const override;
  std::vector<std::size_t> canonical_word(const Element& a) const override;
  Element element_from_word(
      const std::vector<std::size_t>& letters) const override;

  /// One-line images (0-based) of the normal-form factors.
  std::vector<std::vector<std::size_t>> factors(const Element& a) const;
  std::size_t factor_count(const Element& a) const;

  /// The half twist: the lcm of all generators, single factor reversing
  /// every strand.
  Element delta() const;

  /// Largest common left divisor.
  Element left_gcd(const Element& a, const Element& b) const;

  /// The image under reading words backwards; an anti-automorphism fixing
  /// the generators (both families of defining relations are symmetric).
  Element reverse_element(const Element& a) const;

protected:
  Code one_code() const override;
  Code generator_code(std::size_t index) const override;
  Code mul_codes(const Code& a, const Code& b) const override;
  std::optional<Code> left_cancel_codes(const Code& a,
                                        const Code& c) const override;
  LcmTriple lcm_codes(const Code& a, const Code& b) const override;

private:
  explicit BraidMonoid(std::size_t strands) : strands_(strands) {}

  Code reversed_code(const Code& code) const;
  Letters code_word(const Code& code) const;
  Code word_code(const Letters& word) const;

  std::size_t strands_;
};

}  // namespace orefrac
