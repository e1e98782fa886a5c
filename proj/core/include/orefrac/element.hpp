#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace orefrac {

class Monoid;

/// Canonical form of a monoid element, encoded as a word of unsigned
/// integers owned and interpreted by the parent monoid instance.
using Code = std::vector<std::uint64_t>;

/// An element of one concrete monoid instance. Immutable value type.
/// Two elements are equal iff they belong to the same instance and their
/// canonical codes are identical.
class Element {
public:
  Element() = delete;

  const Monoid& monoid() const { return *monoid_; }
  const std::shared_ptr<const Monoid>& monoid_ptr() const { return monoid_; }
  const Code& code() const { return code_; }

  bool same_monoid(const Element& other) const {
    return monoid_ == other.monoid_;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.monoid_ == b.monoid_ && a.code_ == b.code_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

  /// Deterministic total order (owner pointer, then code lexicographically);
  /// used for sorted containers and reproducible enumeration output.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.monoid_ != b.monoid_) return a.monoid_ < b.monoid_;
    return a.code_ < b.code_;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    };
    mix(reinterpret_cast<std::uintptr_t>(monoid_.get()));
    for (std::uint64_t w : code_) mix(w);
    return h;
  }

private:
  friend class Monoid;
  Element(std::shared_ptr<const Monoid> monoid, Code code)
      : monoid_(std::move(monoid)), code_(std::move(code)) {}

  std::shared_ptr<const Monoid> monoid_;
  Code code_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

}  // namespace orefrac
