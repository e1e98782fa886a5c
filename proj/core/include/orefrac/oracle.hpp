#pragma once

#include <optional>
#include <vector>

#include "orefrac/monoid.hpp"

namespace orefrac {

/// Bounds for the brute-force oracles. Searches fail loudly with
/// SearchBoundExceeded instead of silently truncating.
struct OracleOptions {
  std::size_t max_word_length = 12;  // canonical-length ceiling
  std::size_t lcm_slack = 2;         // extra layers past the first common layer
  std::size_t max_elements = 2'000'000;  // visited-set safety valve
};

/// Every element of canonical length <= max_word_length for graded
/// instances, or the full multiplicative closure of the generators for
/// finite non-graded instances. Sorted deterministically.
std::vector<Element> enumerate_elements(const Monoid& m,
                                        const OracleOptions& opt = {});

/// Right multiples a*w of canonical length <= bound (graded), or all
/// right multiples over the closure (non-graded).
std::vector<Element> right_multiples_up_to(const Element& a, std::size_t bound,
                                           const OracleOptions& opt = {});

/// Common right multiples of a and b within the bound.
std::vector<Element> common_right_multiples(const Element& a, const Element& b,
                                            std::size_t bound,
                                            const OracleOptions& opt = {});

/// Graded instances only: grows the two multiple sets layer by layer and
/// returns the first nonempty intersection, the common right multiples of
/// minimal canonical length.
std::vector<Element> minimal_common_multiples(const Element& a,
                                              const Element& b,
                                              const OracleOptions& opt = {});

/// The right lcm's found exhaustively: common multiples that left-divide
/// every common multiple in the searched range. Division is decided by
/// multiple-set membership, independent of the instance's left_cancel.
std::vector<Element> lcm_set(const Element& a, const Element& b,
                             const OracleOptions& opt = {});

/// True iff lcm_set(a, b) equals { right_lcm(a,b).join * u : u a unit }.
bool lcm_set_matches_units(const Element& a, const Element& b,
                           const OracleOptions& opt = {});

/// Some w with a*w = c found by bounded search, independent of the
/// instance's left_cancel.
std::optional<Element> bfs_left_quotient(const Element& a, const Element& c,
                                         const OracleOptions& opt = {});

/// Units by exhaustive closure for finite non-graded instances; for graded
/// instances the identity is the only unit (lengths add).
std::vector<Element> oracle_units(const Monoid& m,
                                  const OracleOptions& opt = {});

}  // namespace orefrac
