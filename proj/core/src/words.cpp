#include "orefrac/words.hpp"

#include <cctype>

namespace orefrac {

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

SignedLetter parse_token(const Monoid& m, std::string_view token,
                         bool allow_inverse) {
  constexpr std::string_view kInverseSuffix = "^-1";
  bool inverse = false;
  if (token.size() > kInverseSuffix.size() &&
      token.substr(token.size() - kInverseSuffix.size()) == kInverseSuffix) {
    if (!allow_inverse)
      throw ParseError(m.name() + ": inverse letter '" + std::string(token) +
                       "' not allowed in a positive word");
    inverse = true;
    token.remove_suffix(kInverseSuffix.size());
  }
  auto index = m.parse_letter(token);
  if (!index)
    throw ParseError(m.name() + ": unknown generator token '" +
                     std::string(token) + "'");
  return {*index, inverse};
}

}  // namespace

std::vector<std::size_t> parse_word(const Monoid& m, std::string_view text) {
  std::vector<std::size_t> letters;
  for (std::string_view token : split_tokens(text)) {
    if (token == "1") continue;
    letters.push_back(parse_token(m, token, /*allow_inverse=*/false).index);
  }
  return letters;
}

std::vector<SignedLetter> parse_signed_word(const Monoid& m,
                                            std::string_view text) {
  std::vector<SignedLetter> letters;
  for (std::string_view token : split_tokens(text)) {
    if (token == "1") continue;
    letters.push_back(parse_token(m, token, /*allow_inverse=*/true));
  }
  return letters;
}

std::string render_signed_word(const Monoid& m,
                               const std::vector<SignedLetter>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += m.letter_name(word[i].index);
    if (word[i].inverse) out += "^-1";
  }
  return out;
}

}  // namespace orefrac
