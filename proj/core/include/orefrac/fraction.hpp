#pragma once

#include <string>

#include "orefrac/monoid.hpp"
#include "orefrac/words.hpp"

namespace orefrac {

/// num * den^{-1} in the group of right fractions of the monoid. Kept
/// unreduced; equality is semantic, by cross-multiplying over a right lcm
/// of the denominators.
struct Fraction {
  Element num;
  Element den;
};

/// Checks both parts belong to the same instance.
Fraction make_fraction(Element num, Element den);
Fraction identity_fraction(const Monoid& m);

/// f = g in the group: with den(f) c1 = den(g) c2 = lcm join, compares
/// num(f) c1 against num(g) c2.
bool fraction_eq(const Fraction& f, const Fraction& g);

/// f = 1 exactly when num = den, by left cancellativity.
bool fraction_is_identity(const Fraction& f);

/// Rewrites den(f)^{-1} num(g) as num' den'^{-1} through the right lcm of
/// (num(g), den(f)), giving (num(f) num') / (den(g) den').
Fraction fraction_mul(const Fraction& f, const Fraction& g);

Fraction fraction_inv(const Fraction& f);

/// Repeated fraction_mul; k = 0 gives the identity.
Fraction fraction_pow_direct(const Fraction& f, std::size_t k);

/// Left-to-right product of generators and formal inverses, starting from
/// the identity.
Fraction eval_signed_word(const Monoid& m,
                          const std::vector<SignedLetter>& word);

/// Strips the largest common right divisor of num and den when the
/// instance supports gcds; the value is unchanged since the stripped part
/// cancels inside num * den^{-1}. Returns f untouched otherwise.
Fraction reduced(const Fraction& f);

/// "<num-word> / <den-word>".
std::string render_fraction(const Fraction& f);

}  // namespace orefrac
