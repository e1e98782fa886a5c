#include "orefrac/braid_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace orefrac {

namespace {

// One-line images, 0-based: strand starting at position k ends at p[k].
// The product "a then b" composes as (a*b)[k] = b[a[k]].
using Perm = std::vector<std::uint64_t>;

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_identity(const Perm& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != k) return false;
  return true;
}

Perm letter_perm(std::size_t n, std::size_t i) {
  Perm p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = q[p[k]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[p[k]] = k;
  return r;
}

std::size_t inversions(const Perm& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

Perm delta_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = n - 1 - k;
  return p;
}

// d with a*d = Delta; s_i left-divides d exactly when a*s_i stays
// square-free.
Perm complement_perm(const Perm& a) {
  const std::size_t n = a.size();
  Perm ainv = inverse(a);
  Perm d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = n - 1 - ainv[k];
  return d;
}

// Largest common left divisor in the lattice of square-free braids.
// s_i left-divides a simple braid exactly at the descents of its
// permutation, and peeling any common descent from both arguments keeps
// the remaining common divisors intact, so the greedy peel terminates on
// the meet.
Perm meet_left(Perm p, Perm q) {
  const std::size_t n = p.size();
  Perm acc = identity_perm(n);
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1] && q[i] > q[i + 1]) {
        std::swap(p[i], p[i + 1]);
        std::swap(q[i], q[i + 1]);
        for (auto& v : acc) {
          if (v == i)
            v = i + 1;
          else if (v == i + 1)
            v = i;
        }
        peeled = true;
      }
    }
  }
  return acc;
}

// Minimal positive word for a square-free braid, peeling the smallest
// descent first; its length is the inversion count.
Letters perm_word(Perm p) {
  Letters word;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        word.push_back(i);
        std::swap(p[i], p[i + 1]);
        found = true;
        break;
      }
    }
  }
  return word;
}

// Left-greedy normalization by local passes: slide the largest head of
// each factor that keeps its left neighbor square-free, until stable.
// A neighboring pair (a, b) is normal exactly when meet(a\Delta, b) is
// trivial.
void normalize(std::vector<Perm>& fs) {
  std::erase_if(fs, [](const Perm& f) { return is_identity(f); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      Perm u = meet_left(complement_perm(fs[i]), fs[i + 1]);
      if (!is_identity(u)) {
        fs[i] = compose(fs[i], u);
        fs[i + 1] = compose(inverse(u), fs[i + 1]);
        changed = true;
      }
    }
    std::erase_if(fs, [](const Perm& f) { return is_identity(f); });
  }
}

std::vector<Perm> decode(const Code& code, std::size_t n) {
  std::vector<Perm> fs;
  fs.reserve(code.size() / n);
  for (std::size_t at = 0; at < code.size(); at += n)
    fs.emplace_back(code.begin() + at, code.begin() + at + n);
  return fs;
}

Code encode(const std::vector<Perm>& fs) {
  Code code;
  for (const Perm& f : fs) code.insert(code.end(), f.begin(), f.end());
  return code;
}

}  // namespace

std::shared_ptr<const BraidMonoid> BraidMonoid::create(std::size_t strands) {
  if (strands < 2) throw DomainError("braid: need at least 2 strands");
  return std::shared_ptr<const BraidMonoid>(new BraidMonoid(strands));
}

std::string BraidMonoid::name() const {
  return "braid:" + std::to_string(strands_);
}

MonoidCapabilities BraidMonoid::capabilities() const {
  return {/*has_trivial_units=*/true, /*supports_left_gcd=*/true,
          /*generator_count=*/strands_ - 1};
}

std::size_t BraidMonoid::canonical_length(const Element& a) const {
  require_owned(a);
  std::size_t total = 0;
  for (const Perm& f : decode(a.code(), strands_)) total += inversions(f);
  return total;
}

std::string BraidMonoid::letter_name(std::size_t index) const {
  return "s" + std::to_string(index + 1);
}

std::string BraidMonoid::render(const Element& a) const {
  require_owned(a);
  auto fs = decode(a.code(), strands_);
  if (fs.empty()) return "1";
  std::string out;
  for (const Perm& f : fs) {
    if (!out.empty()) out += ' ';
    out += '[';
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(f[k] + 1);
    }
    out += ']';
  }
  return out;
}

Letters BraidMonoid::code_word(const Code& code) const {
  Letters word;
  for (const Perm& f : decode(code, strands_)) {
    Letters part = perm_word(f);
    word.insert(word.end(), part.begin(), part.end());
  }
  return word;
}

Code BraidMonoid::word_code(const Letters& word) const {
  std::vector<Perm> fs;
  fs.reserve(word.size());
  for (std::size_t letter : word) {
    if (letter + 1 >= strands_)
      throw DomainError(name() + ": generator s" + std::to_string(letter + 1) +
                        " out of range");
    fs.push_back(letter_perm(strands_, letter));
  }
  normalize(fs);
  return encode(fs);
}

std::vector<std::size_t> BraidMonoid::canonical_word(const Element& a) const {
  require_owned(a);
  return code_word(a.code());
}

Element BraidMonoid::element_from_word(
    const std::vector<std::size_t>& letters) const {
  return make(word_code(letters));
}

std::vector<std::vector<std::size_t>> BraidMonoid::factors(
    const Element& a) const {
  require_owned(a);
  std::vector<std::vector<std::size_t>> out;
  for (const Perm& f : decode(a.code(), strands_))
    out.emplace_back(f.begin(), f.end());
  return out;
}

std::size_t BraidMonoid::factor_count(const Element& a) const {
  require_owned(a);
  return a.code().size() / strands_;
}

Element BraidMonoid::delta() const { return make(delta_perm(strands_)); }

Code BraidMonoid::one_code() const { return {}; }

Code BraidMonoid::generator_code(std::size_t index) const {
  return letter_perm(strands_, index);
}

Code BraidMonoid::mul_codes(const Code& a, const Code& b) const {
  std::vector<Perm> fs = decode(a, strands_);
  std::vector<Perm> gs = decode(b, strands_);
  fs.insert(fs.end(), gs.begin(), gs.end());
  normalize(fs);
  return encode(fs);
}

std::optional<Code> BraidMonoid::left_cancel_codes(const Code& a,
                                                   const Code& c) const {
  // c * pos = a * neg = lcm(c, a); a left-divides c exactly when the lcm
  // is c itself, i.e. when pos is empty (positive words are graded).
  ReversingResult r = reverse_word(strands_, code_word(a), code_word(c));
  if (!r.pos.empty()) return std::nullopt;
  return word_code(r.neg);
}

Monoid::LcmTriple BraidMonoid::lcm_codes(const Code& a, const Code& b) const {
  Letters wa = code_word(a);
  ReversingResult r = reverse_word(strands_, /*den=*/code_word(b), /*num=*/wa);
  Letters join_word = wa;
  join_word.insert(join_word.end(), r.pos.begin(), r.pos.end());
  return {word_code(join_word), word_code(r.pos), word_code(r.neg)};
}

Code BraidMonoid::reversed_code(const Code& code) const {
  Letters word = code_word(code);
  std::reverse(word.begin(), word.end());
  return word_code(word);
}

Element BraidMonoid::reverse_element(const Element& a) const {
  require_owned(a);
  return make(reversed_code(a.code()));
}

std::optional<Element> BraidMonoid::try_right_cancel(const Element& c,
                                                     const Element& b) const {
  require_same_instance(c, b);
  auto rev_a = left_cancel_codes(reversed_code(b.code()),
                                 reversed_code(c.code()));
  if (!rev_a) return std::nullopt;
  Element a = make(reversed_code(*rev_a));
  if (mul(a, b) != c)
    throw InternalInvariantViolation(name() +
                                     ": right_cancel produced a bad quotient");
  return a;
}

Element BraidMonoid::left_gcd(const Element& a, const Element& b) const {
  require_same_instance(a, b);
  std::vector<Perm> fa = decode(a.code(), strands_);
  std::vector<Perm> fb = decode(b.code(), strands_);
  std::vector<Perm> acc;
  // The largest square-free left divisor of an element is its first
  // normal-form factor, so the gcd peels off meet(first, first) until
  // that meet is trivial.
  while (!fa.empty() && !fb.empty()) {
    Perm s = meet_left(fa[0], fb[0]);
    if (is_identity(s)) break;
    Perm sinv = inverse(s);
    fa[0] = compose(sinv, fa[0]);
    fb[0] = compose(sinv, fb[0]);
    normalize(fa);
    normalize(fb);
    acc.push_back(s);
  }
  normalize(acc);
  return make(encode(acc));
}

std::optional<Element> BraidMonoid::try_right_gcd(const Element& a,
                                                  const Element& b) const {
  require_same_instance(a, b);
  Element g = left_gcd(reverse_element(a), reverse_element(b));
  return reverse_element(g);
}

}  // namespace orefrac
