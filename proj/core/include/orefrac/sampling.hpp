#pragma once

#include <cstdint>
#include <random>

#include "orefrac/fraction.hpp"

namespace orefrac {

/// Deterministic random source. mt19937_64 has a standard-specified
/// output sequence and bounded draws use rejection sampling, so streams
/// are identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

  bool coin() { return next() & 1; }

private:
  std::mt19937_64 gen_;
};

/// Product of exactly `length` uniformly chosen generators.
Element random_element(const Monoid& m, Rng& rng, std::size_t length);

/// Like random_element with the length itself uniform in [0, max_length].
Element random_element_up_to(const Monoid& m, Rng& rng,
                             std::size_t max_length);

std::vector<SignedLetter> random_signed_word(const Monoid& m, Rng& rng,
                                             std::size_t length);

/// Fraction with independently sampled numerator and denominator.
Fraction random_fraction(const Monoid& m, Rng& rng, std::size_t max_length);

}  // namespace orefrac
