#include "orefrac/cyclic_monoid.hpp"

namespace orefrac {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::shared_ptr<const CyclicMonoid> CyclicMonoid::create(
    std::uint64_t modulus, std::optional<std::uint64_t> twist_seed) {
  if (modulus < 1) throw DomainError("cyclic: modulus must be >= 1");
  return std::shared_ptr<const CyclicMonoid>(
      new CyclicMonoid(modulus, twist_seed));
}

std::string CyclicMonoid::name() const {
  return "cyclic:" + std::to_string(modulus_);
}

MonoidCapabilities CyclicMonoid::capabilities() const {
  return {/*has_trivial_units=*/modulus_ == 1, /*supports_left_gcd=*/false,
          /*generator_count=*/1};
}

bool CyclicMonoid::is_unit(const Element& a) const {
  require_owned(a);
  return true;  // every element of a group is invertible
}

std::optional<Element> CyclicMonoid::unit_inverse(const Element& a) const {
  require_owned(a);
  return make(Code{(modulus_ - a.code()[0]) % modulus_});
}

std::vector<Element> CyclicMonoid::units() const {
  std::vector<Element> all;
  all.reserve(modulus_);
  for (std::uint64_t r = 0; r < modulus_; ++r) all.push_back(make(Code{r}));
  return all;
}

std::optional<Element> CyclicMonoid::try_right_cancel(const Element& c,
                                                      const Element& b) const {
  require_same_instance(c, b);
  return make(Code{(c.code()[0] + modulus_ - b.code()[0]) % modulus_});
}

std::size_t CyclicMonoid::canonical_length(const Element& a) const {
  require_owned(a);
  return static_cast<std::size_t>(a.code()[0]);
}

std::string CyclicMonoid::letter_name(std::size_t) const { return "e1"; }

std::string CyclicMonoid::render(const Element& a) const {
  require_owned(a);
  return std::to_string(a.code()[0]);
}

std::vector<std::size_t> CyclicMonoid::canonical_word(const Element& a) const {
  require_owned(a);
  return std::vector<std::size_t>(static_cast<std::size_t>(a.code()[0]), 0);
}

Element CyclicMonoid::from_residue(std::uint64_t r) const {
  return make(Code{r % modulus_});
}

Code CyclicMonoid::one_code() const { return Code{0}; }

Code CyclicMonoid::generator_code(std::size_t) const {
  return Code{1 % modulus_};
}

Code CyclicMonoid::mul_codes(const Code& a, const Code& b) const {
  return Code{(a[0] + b[0]) % modulus_};
}

std::optional<Code> CyclicMonoid::left_cancel_codes(const Code& a,
                                                    const Code& c) const {
  return Code{(c[0] + modulus_ - a[0]) % modulus_};
}

std::uint64_t CyclicMonoid::join_for(std::uint64_t a, std::uint64_t b) const {
  if (!twist_seed_) return 0;
  std::uint64_t h = splitmix64(*twist_seed_ ^ splitmix64(a ^ splitmix64(b)));
  return h % modulus_;
}

Monoid::LcmTriple CyclicMonoid::lcm_codes(const Code& a, const Code& b) const {
  std::uint64_t join = join_for(a[0], b[0]);
  LcmTriple t;
  t.join = Code{join};
  t.left_comp = Code{(join + modulus_ - a[0]) % modulus_};
  t.right_comp = Code{(join + modulus_ - b[0]) % modulus_};
  return t;
}

}  // namespace orefrac
