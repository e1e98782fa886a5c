#include "orefrac/fraction.hpp"

namespace orefrac {

Fraction make_fraction(Element num, Element den) {
  num.monoid().require_same_instance(num, den);
  return {std::move(num), std::move(den)};
}

Fraction identity_fraction(const Monoid& m) { return {m.one(), m.one()}; }

bool fraction_eq(const Fraction& f, const Fraction& g) {
  const Monoid& m = f.num.monoid();
  m.require_same_instance(f.den, g.num);
  m.require_same_instance(g.num, g.den);
  LcmCertificate cert = m.right_lcm(f.den, g.den);
  return m.mul(f.num, cert.left_comp) == m.mul(g.num, cert.right_comp);
}

bool fraction_is_identity(const Fraction& f) { return f.num == f.den; }

Fraction fraction_mul(const Fraction& f, const Fraction& g) {
  const Monoid& m = f.num.monoid();
  m.require_same_instance(f.den, g.num);
  // den(f)^{-1} num(g) = x' y'^{-1} where num(g) y' = den(f) x' = join.
  LcmCertificate cert = m.right_lcm(g.num, f.den);
  return {m.mul(f.num, cert.right_comp), m.mul(g.den, cert.left_comp)};
}

Fraction fraction_inv(const Fraction& f) { return {f.den, f.num}; }

Fraction fraction_pow_direct(const Fraction& f, std::size_t k) {
  Fraction acc = identity_fraction(f.num.monoid());
  for (std::size_t i = 0; i < k; ++i) acc = fraction_mul(acc, f);
  return acc;
}

Fraction eval_signed_word(const Monoid& m,
                          const std::vector<SignedLetter>& word) {
  Fraction acc = identity_fraction(m);
  for (const SignedLetter& letter : word) {
    Element g = m.generator(letter.index);
    Fraction step = letter.inverse ? Fraction{m.one(), std::move(g)}
                                   : Fraction{std::move(g), m.one()};
    acc = fraction_mul(acc, step);
  }
  return acc;
}

Fraction reduced(const Fraction& f) {
  const Monoid& m = f.num.monoid();
  if (!m.capabilities().supports_left_gcd) return f;
  auto g = m.try_right_gcd(f.num, f.den);
  if (!g) return f;
  auto num = m.try_right_cancel(f.num, *g);
  auto den = m.try_right_cancel(f.den, *g);
  if (!num || !den)
    throw InternalInvariantViolation(m.name() +
                                     ": right gcd does not divide its inputs");
  return {std::move(*num), std::move(*den)};
}

std::string render_fraction(const Fraction& f) {
  const Monoid& m = f.num.monoid();
  return m.render_word(f.num) + " / " + m.render_word(f.den);
}

}  // namespace orefrac
