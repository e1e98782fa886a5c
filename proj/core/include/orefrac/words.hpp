#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orefrac/monoid.hpp"

namespace orefrac {

/// A generator letter with an optional formal inverse mark. Signed words
/// denote group elements; positive words denote monoid elements.
struct SignedLetter {
  std::size_t index = 0;
  bool inverse = false;

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

/// Parses whitespace-separated generator tokens ("s1 s2", "x y", "e1").
/// The token "1" stands for the empty word and may appear anywhere.
/// Throws ParseError on an unknown token or an ^-1 suffix.
std::vector<std::size_t> parse_word(const Monoid& m, std::string_view text);

/// Like parse_word, additionally accepting the suffix ^-1 on any token.
std::vector<SignedLetter> parse_signed_word(const Monoid& m,
                                            std::string_view text);

/// "s1 s2^-1"; "1" for the empty word.
std::string render_signed_word(const Monoid& m,
                               const std::vector<SignedLetter>& word);

}  // namespace orefrac
