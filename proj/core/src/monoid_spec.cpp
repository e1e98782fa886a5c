#include "orefrac/monoid_spec.hpp"

#include <charconv>

#include "orefrac/braid_monoid.hpp"
#include "orefrac/cyclic_monoid.hpp"
#include "orefrac/errors.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/vec_monoid.hpp"

namespace orefrac {

namespace {

std::uint64_t parse_parameter(const std::string& text, std::size_t colon) {
  if (colon + 1 >= text.size())
    throw ParseError("monoid selector '" + text + "' is missing a parameter");
  const char* first = text.data() + colon + 1;
  const char* last = text.data() + text.size();
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last)
    throw ParseError("monoid selector '" + text +
                     "' has a malformed numeric parameter");
  return value;
}

}  // namespace

MonoidSpec parse_monoid_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (head == "klein") {
    if (colon != std::string::npos)
      throw ParseError("monoid selector 'klein' takes no parameter");
    return {MonoidSpec::Kind::klein, 0};
  }
  MonoidSpec::Kind kind;
  if (head == "braid")
    kind = MonoidSpec::Kind::braid;
  else if (head == "nk")
    kind = MonoidSpec::Kind::nk;
  else if (head == "cyclic")
    kind = MonoidSpec::Kind::cyclic;
  else
    throw ParseError("unknown monoid selector '" + text + "'");
  if (colon == std::string::npos)
    throw ParseError("monoid selector '" + text + "' requires ':<n>'");
  return {kind, parse_parameter(text, colon)};
}

std::shared_ptr<const Monoid> make_monoid(const MonoidSpec& spec) {
  switch (spec.kind) {
    case MonoidSpec::Kind::braid:
      return BraidMonoid::create(spec.parameter);
    case MonoidSpec::Kind::klein:
      return KleinMonoid::create();
    case MonoidSpec::Kind::nk:
      return VecMonoid::create(spec.parameter);
    case MonoidSpec::Kind::cyclic:
      return CyclicMonoid::create(spec.parameter);
  }
  throw ParseError("unhandled monoid selector kind");
}

}  // namespace orefrac
