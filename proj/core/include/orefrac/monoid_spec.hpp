#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "orefrac/monoid.hpp"

namespace orefrac {

/// Parsed monoid selector: "braid:<n>", "klein", "nk:<k>", "cyclic:<n>".
struct MonoidSpec {
  enum class Kind { braid, klein, nk, cyclic };

  Kind kind = Kind::klein;
  std::uint64_t parameter = 0;  // unused for klein

  friend bool operator==(const MonoidSpec&, const MonoidSpec&) = default;
};

/// Throws ParseError on anything else (bad name, missing or trailing
/// parameter, non-numeric parameter).
MonoidSpec parse_monoid_spec(const std::string& text);

std::shared_ptr<const Monoid> make_monoid(const MonoidSpec& spec);

inline std::shared_ptr<const Monoid> make_monoid(const std::string& text) {
  return make_monoid(parse_monoid_spec(text));
}

}  // namespace orefrac
