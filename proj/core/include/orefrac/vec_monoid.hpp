#pragma once

#include <memory>

#include "orefrac/monoid.hpp"

namespace orefrac {

/// Free abelian monoid N^k under componentwise addition. The right lcm is
/// the componentwise max, realizing sup-as-lcm for the positive cone of
/// the left-orderable group Z^k. Generator e_i is the i-th unit vector.
class VecMonoid final : public Monoid {
public:
  static std::shared_ptr<const VecMonoid> create(std::size_t dimension);

  std::size_t dimension() const { return dim_; }

  std::string name() const override;
  MonoidCapabilities capabilities() const override;
  std::size_t canonical_length(const Element& a) const override;
  std::string letter_name(std::size_t index) const override;
  std::string render(const Element& a) const override;
  std::vector<std::size_t> canonical_word(const Element& a) const override;

  Element from_coords(const std::vector<std::uint64_t>& coords) const;

protected:
  Code one_code() const override;
  Code generator_code(std::size_t index) const override;
  Code mul_codes(const Code& a, const Code& b) const override;
  std::optional<Code> left_cancel_codes(const Code& a,
                                        const Code& c) const override;
  LcmTriple lcm_codes(const Code& a, const Code& b) const override;

private:
  explicit VecMonoid(std::size_t dimension) : dim_(dimension) {}
  std::size_t dim_;
};

}  // namespace orefrac
