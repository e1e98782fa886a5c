#include "orefrac/vec_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orefrac {

std::shared_ptr<const VecMonoid> VecMonoid::create(std::size_t dimension) {
  if (dimension < 1) throw DomainError("nk: dimension must be >= 1");
  return std::shared_ptr<const VecMonoid>(new VecMonoid(dimension));
}

std::string VecMonoid::name() const {
  return "nk:" + std::to_string(dim_);
}

MonoidCapabilities VecMonoid::capabilities() const {
  return {/*has_trivial_units=*/true, /*supports_left_gcd=*/false, dim_};
}

std::size_t VecMonoid::canonical_length(const Element& a) const {
  require_owned(a);
  const Code& c = a.code();
  return static_cast<std::size_t>(
      std::accumulate(c.begin(), c.end(), std::uint64_t{0}));
}

std::string VecMonoid::letter_name(std::size_t index) const {
  return "e" + std::to_string(index + 1);
}

std::string VecMonoid::render(const Element& a) const {
  require_owned(a);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) os << ',';
    os << a.code()[i];
  }
  os << ')';
  return os.str();
}

std::vector<std::size_t> VecMonoid::canonical_word(const Element& a) const {
  require_owned(a);
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::uint64_t r = 0; r < a.code()[i]; ++r) letters.push_back(i);
  return letters;
}

Element VecMonoid::from_coords(const std::vector<std::uint64_t>& coords) const {
  if (coords.size() != dim_)
    throw DomainError(name() + ": expected " + std::to_string(dim_) +
                      " coordinates, got " + std::to_string(coords.size()));
  return make(Code(coords));
}

Code VecMonoid::one_code() const { return Code(dim_, 0); }

Code VecMonoid::generator_code(std::size_t index) const {
  Code c(dim_, 0);
  c[index] = 1;
  return c;
}

Code VecMonoid::mul_codes(const Code& a, const Code& b) const {
  Code c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = a[i] + b[i];
  return c;
}

std::optional<Code> VecMonoid::left_cancel_codes(const Code& a,
                                                 const Code& c) const {
  Code b(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c[i] < a[i]) return std::nullopt;
    b[i] = c[i] - a[i];
  }
  return b;
}

Monoid::LcmTriple VecMonoid::lcm_codes(const Code& a, const Code& b) const {
  LcmTriple t;
  t.join.resize(dim_);
  t.left_comp.resize(dim_);
  t.right_comp.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    t.join[i] = std::max(a[i], b[i]);
    t.left_comp[i] = t.join[i] - a[i];
    t.right_comp[i] = t.join[i] - b[i];
  }
  return t;
}

}  // namespace orefrac
