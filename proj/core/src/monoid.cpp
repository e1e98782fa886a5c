#include "orefrac/monoid.hpp"

#include <sstream>

namespace orefrac {

Element Monoid::make(Code code) const {
  return Element(shared_from_this(), std::move(code));
}

Element Monoid::one() const { return make(one_code()); }

Element Monoid::generator(std::size_t index) const {
  if (index >= generator_count()) {
    std::ostringstream os;
    os << name() << ": generator index " << index + 1 << " out of range (has "
       << generator_count() << " generators)";
    throw DomainError(os.str());
  }
  return make(generator_code(index));
}

std::vector<Element> Monoid::generators() const {
  std::vector<Element> gens;
  gens.reserve(generator_count());
  for (std::size_t i = 0; i < generator_count(); ++i)
    gens.push_back(generator(i));
  return gens;
}

void Monoid::require_owned(const Element& a) const {
  if (&a.monoid() != this)
    throw DomainError("element belongs to monoid " + a.monoid().name() +
                      ", expected " + name());
}

void Monoid::require_same_instance(const Element& a, const Element& b) const {
  require_owned(a);
  require_owned(b);
}

Element Monoid::mul(const Element& a, const Element& b) const {
  require_same_instance(a, b);
  return make(mul_codes(a.code(), b.code()));
}

std::optional<Element> Monoid::try_left_cancel(const Element& a,
                                               const Element& c) const {
  require_same_instance(a, c);
  auto code = left_cancel_codes(a.code(), c.code());
  if (!code) return std::nullopt;
  Element b = make(std::move(*code));
  if (mul(a, b) != c)
    throw InternalInvariantViolation(name() +
                                     ": left_cancel produced a bad quotient");
  return b;
}

Element Monoid::left_cancel(const Element& a, const Element& c) const {
  auto b = try_left_cancel(a, c);
  if (!b)
    throw NotLeftMultiple(name() + ": " + render(c) +
                          " is not a right multiple of " + render(a));
  return *b;
}

bool Monoid::left_divides(const Element& a, const Element& c) const {
  return try_left_cancel(a, c).has_value();
}

LcmCertificate Monoid::right_lcm(const Element& a, const Element& b) const {
  require_same_instance(a, b);
  LcmTriple t = lcm_codes(a.code(), b.code());
  LcmCertificate cert{a, b, make(std::move(t.left_comp)),
                      make(std::move(t.right_comp)), make(std::move(t.join))};
  if (mul(cert.left, cert.left_comp) != cert.join ||
      mul(cert.right, cert.right_comp) != cert.join)
    throw InternalInvariantViolation(name() +
                                     ": lcm certificate failed product check");
  return cert;
}

bool Monoid::is_unit(const Element& a) const {
  require_owned(a);
  return a == one();
}

std::optional<Element> Monoid::unit_inverse(const Element& a) const {
  require_owned(a);
  if (a == one()) return one();
  return std::nullopt;
}

std::vector<Element> Monoid::units() const { return {one()}; }

std::optional<Element> Monoid::try_right_cancel(const Element&,
                                                const Element&) const {
  return std::nullopt;
}

std::optional<Element> Monoid::try_right_gcd(const Element&,
                                             const Element&) const {
  return std::nullopt;
}

std::optional<std::size_t> Monoid::parse_letter(std::string_view token) const {
  for (std::size_t i = 0; i < generator_count(); ++i)
    if (letter_name(i) == token) return i;
  return std::nullopt;
}

std::string Monoid::render_word(const Element& a) const {
  auto letters = canonical_word(a);
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(letters[i]);
  }
  return out;
}

Element Monoid::element_from_word(const std::vector<std::size_t>& letters) const {
  Element acc = one();
  for (std::size_t letter : letters) acc = mul(acc, generator(letter));
  return acc;
}

}  // namespace orefrac
