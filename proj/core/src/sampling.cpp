#include "orefrac/sampling.hpp"

#include <limits>

namespace orefrac {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n) + 1;
  const std::uint64_t reject_from = 0 - (rem == n ? 0 : rem);
  std::uint64_t v = next();
  while (rem != n && v >= reject_from) v = next();
  return v % n;
}

Element random_element(const Monoid& m, Rng& rng, std::size_t length) {
  std::vector<std::size_t> letters(length);
  for (std::size_t& letter : letters)
    letter = static_cast<std::size_t>(rng.below(m.generator_count()));
  return m.element_from_word(letters);
}

Element random_element_up_to(const Monoid& m, Rng& rng,
                             std::size_t max_length) {
  return random_element(m, rng,
                        static_cast<std::size_t>(rng.below(max_length + 1)));
}

std::vector<SignedLetter> random_signed_word(const Monoid& m, Rng& rng,
                                             std::size_t length) {
  std::vector<SignedLetter> word(length);
  for (SignedLetter& letter : word) {
    letter.index = static_cast<std::size_t>(rng.below(m.generator_count()));
    letter.inverse = rng.coin();
  }
  return word;
}

Fraction random_fraction(const Monoid& m, Rng& rng, std::size_t max_length) {
  Element num = random_element_up_to(m, rng, max_length);
  Element den = random_element_up_to(m, rng, max_length);
  return {std::move(num), std::move(den)};
}

}  // namespace orefrac
