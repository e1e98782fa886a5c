#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orefrac/element.hpp"
#include "orefrac/errors.hpp"

namespace orefrac {

/// Per-instance constant flags, consistent with instance behavior.
struct MonoidCapabilities {
  bool has_trivial_units = true;   // is_unit holds only for the identity
  bool supports_left_gcd = false;  // instance exposes gcd machinery (braid)
  std::size_t generator_count = 0;
};

/// Witness that join is a right lcm of left and right:
///   left * left_comp == join == right * right_comp.
/// Product equations are re-checked by multiplication on construction.
struct LcmCertificate {
  Element left;
  Element right;
  Element left_comp;   // y' with  x * y' = join
  Element right_comp;  // x' with  y * x' = join
  Element join;        // z, a right lcm of x and y
};

/// Contract of a left-cancellative monoid in which any two elements admit
/// a right lcm. Operations are pure functions on immutable values;
/// instances are stateless after construction and safe for concurrent use.
///
/// Concrete instances interpret element codes themselves; the base class
/// owns cross-instance checks and certificate validation. Instances are
/// always created through shared_ptr factories.
class Monoid : public std::enable_shared_from_this<Monoid> {
public:
  virtual ~Monoid() = default;

  virtual std::string name() const = 0;
  virtual MonoidCapabilities capabilities() const = 0;
  std::size_t generator_count() const { return capabilities().generator_count; }

  Element one() const;
  Element generator(std::size_t index) const;  // 0-based
  std::vector<Element> generators() const;

  /// Canonical form of a*b. Associative; one() is two-sided neutral.
  Element mul(const Element& a, const Element& b) const;

  /// The unique b with a*b = c, or NotLeftMultiple.
  Element left_cancel(const Element& a, const Element& c) const;
  std::optional<Element> try_left_cancel(const Element& a,
                                         const Element& c) const;

  /// True iff c is a right multiple of a.
  bool left_divides(const Element& a, const Element& c) const;

  /// A certificate whose join is a right lcm of a and b. With trivial
  /// units the join is THE right lcm; otherwise it is the instance's
  /// canonical choice (all choices agree up to right units).
  LcmCertificate right_lcm(const Element& a, const Element& b) const;

  /// True iff a has a two-sided inverse in the monoid.
  virtual bool is_unit(const Element& a) const;

  /// The two-sided inverse of a unit, when a is one.
  virtual std::optional<Element> unit_inverse(const Element& a) const;

  /// All units of the monoid, when enumerable. Instances with trivial
  /// units return {one()}.
  virtual std::vector<Element> units() const;

  /// The a with a*b = c, when instances support it (used by fraction
  /// reduction). Default: unsupported.
  virtual std::optional<Element> try_right_cancel(const Element& c,
                                                  const Element& b) const;

  /// Greatest common right divisor of a and b, for instances advertising
  /// supports_left_gcd. Default: unsupported.
  virtual std::optional<Element> try_right_gcd(const Element& a,
                                               const Element& b) const;

  /// Letter length of the canonical form. Additive under mul for graded
  /// instances (see is_graded); for others it is the canonical word length.
  virtual std::size_t canonical_length(const Element& a) const = 0;

  /// True when canonical_length is an additive grading. Graded instances
  /// admit complete bounded searches layer by layer; non-graded finite
  /// instances are enumerated by closure instead.
  virtual bool is_graded() const { return true; }

  // -- word and text interface --------------------------------------------

  virtual std::string letter_name(std::size_t index) const = 0;
  virtual std::optional<std::size_t> parse_letter(std::string_view token) const;

  /// Canonical display form (tuples, factor lists, D-power notation).
  virtual std::string render(const Element& a) const = 0;
  /// A positive generator word for the element; "1" for the identity.
  std::string render_word(const Element& a) const;
  /// Letters of a positive word representing the element's canonical form.
  virtual std::vector<std::size_t> canonical_word(const Element& a) const = 0;

  /// Element of the product of the given generator letters.
  virtual Element element_from_word(const std::vector<std::size_t>& letters) const;

  void require_same_instance(const Element& a, const Element& b) const;
  void require_owned(const Element& a) const;

protected:
  Monoid() = default;

  Element make(Code code) const;

  virtual Code one_code() const = 0;
  virtual Code generator_code(std::size_t index) const = 0;
  virtual Code mul_codes(const Code& a, const Code& b) const = 0;
  virtual std::optional<Code> left_cancel_codes(const Code& a,
                                                const Code& c) const = 0;

  struct LcmTriple {
    Code join;
    Code left_comp;
    Code right_comp;
  };
  virtual LcmTriple lcm_codes(const Code& a, const Code& b) const = 0;
};

}  // namespace orefrac
