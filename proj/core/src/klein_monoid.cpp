#include "orefrac/klein_monoid.hpp"

#include <algorithm>

namespace orefrac {

namespace {

// Tail letters are 1 = x, 2 = y inside codes; 0 marks the empty tail.
constexpr std::uint64_t kNone = 0;

std::uint64_t other(std::uint64_t letter) { return 3 - letter; }

std::uint64_t letter_at(std::uint64_t start, std::uint64_t i) {
  return (i % 2 == 0) ? start : other(start);
}

std::uint64_t last_letter(std::uint64_t start, std::uint64_t len) {
  return letter_at(start, len - 1);
}

Code pack(std::uint64_t d, std::uint64_t start, std::uint64_t len) {
  if (len == 0) return Code{d, kNone, 0};
  return Code{d, start, len};
}

// Delta deficiency of (., s, l) toward any element with tail (u, t): the
// element D^e * alt(u, t) is a right multiple of D^d * alt(s, l) iff
// e >= d + def. With matching starts the tails overlap directly; with
// mismatched starts the whole left tail must be absorbed into deltas.
std::uint64_t deficiency(std::uint64_t s, std::uint64_t l, std::uint64_t u,
                         std::uint64_t t) {
  if (l == 0 || u == s) return l > t ? l - t : 0;
  return l;
}

}  // namespace

std::shared_ptr<const KleinMonoid> KleinMonoid::create() {
  return std::shared_ptr<const KleinMonoid>(new KleinMonoid());
}

std::string KleinMonoid::name() const { return "klein"; }

MonoidCapabilities KleinMonoid::capabilities() const {
  return {/*has_trivial_units=*/true, /*supports_left_gcd=*/false,
          /*generator_count=*/2};
}

std::size_t KleinMonoid::canonical_length(const Element& a) const {
  require_owned(a);
  return static_cast<std::size_t>(2 * a.code()[0] + a.code()[2]);
}

std::string KleinMonoid::letter_name(std::size_t index) const {
  return index == 0 ? "x" : "y";
}

std::string KleinMonoid::render(const Element& a) const {
  require_owned(a);
  const Code& c = a.code();
  if (c[0] == 0 && c[2] == 0) return "1";
  std::string out;
  for (std::uint64_t i = 0; i < c[0]; ++i) {
    if (!out.empty()) out += ' ';
    out += 'D';
  }
  for (std::uint64_t i = 0; i < c[2]; ++i) {
    if (!out.empty()) out += ' ';
    out += letter_name(letter_at(c[1], i) - 1);
  }
  return out;
}

std::vector<std::size_t> KleinMonoid::canonical_word(const Element& a) const {
  require_owned(a);
  const Code& c = a.code();
  std::vector<std::size_t> letters;
  letters.reserve(static_cast<std::size_t>(2 * c[0] + c[2]));
  for (std::uint64_t i = 0; i < c[0]; ++i) {
    letters.push_back(0);
    letters.push_back(0);
  }
  for (std::uint64_t i = 0; i < c[2]; ++i)
    letters.push_back(static_cast<std::size_t>(letter_at(c[1], i) - 1));
  return letters;
}

Element KleinMonoid::from_parts(std::uint64_t delta_power, std::uint64_t start,
                                std::uint64_t length) const {
  if (start > 2 || (length == 0) != (start == kNone))
    throw DomainError("klein: malformed normal form parts");
  return make(pack(delta_power, start, length));
}

std::uint64_t KleinMonoid::delta_power(const Element& a) const {
  require_owned(a);
  return a.code()[0];
}

std::uint64_t KleinMonoid::tail_start(const Element& a) const {
  require_owned(a);
  return a.code()[1];
}

std::uint64_t KleinMonoid::tail_length(const Element& a) const {
  require_owned(a);
  return a.code()[2];
}

Code KleinMonoid::one_code() const { return Code{0, kNone, 0}; }

Code KleinMonoid::generator_code(std::size_t index) const {
  return Code{0, index + 1, 1};
}

Code KleinMonoid::mul_codes(const Code& a, const Code& b) const {
  const std::uint64_t da = a[0], sa = a[1], la = a[2];
  const std::uint64_t db = b[0], sb = b[1], lb = b[2];
  if (la == 0) return pack(da + db, sb, lb);
  if (lb == 0) return pack(da + db, sa, la);
  if (last_letter(sa, la) != sb) return pack(da + db, sa, la + lb);
  // Equal boundary letters cancel into a delta, re-exposing another equal
  // pair, so the cascade consumes the shorter tail entirely.
  const std::uint64_t m = std::min(la, lb);
  const std::uint64_t d = da + db + m;
  if (la > m) return pack(d, sa, la - m);
  if (lb > m) return pack(d, letter_at(sb, m), lb - m);
  return pack(d, kNone, 0);
}

std::optional<Code> KleinMonoid::left_cancel_codes(const Code& a,
                                                   const Code& c) const {
  const std::uint64_t da = a[0], sa = a[1], la = a[2];
  const std::uint64_t dc = c[0], sc = c[1], lc = c[2];
  std::vector<Code> candidates;

  // No boundary cancellation: a's tail is a prefix of c's tail.
  if (dc >= da && lc >= la && (la == 0 || sa == sc))
    candidates.push_back(
        pack(dc - da, lc > la ? letter_at(sc, la) : kNone, lc - la));

  // a's tail fully absorbed: b's tail mirrors it, then continues as c's.
  if (la >= 1 && dc >= da + la) {
    const std::uint64_t sb = last_letter(sa, la);
    if (lc == 0 || letter_at(sb, la) == sc)
      candidates.push_back(pack(dc - da - la, sb, la + lc));
  }

  // b's tail fully absorbed: c's tail is a proper prefix of a's.
  if (la >= 1 && lc < la && (lc == 0 || sc == sa)) {
    const std::uint64_t lb = la - lc;
    if (dc >= da + lb)
      candidates.push_back(pack(dc - da - lb, last_letter(sa, la), lb));
  }

  for (const Code& b : candidates)
    if (mul_codes(a, b) == c) return b;
  return std::nullopt;
}

Monoid::LcmTriple KleinMonoid::lcm_codes(const Code& a, const Code& b) const {
  const std::uint64_t da = a[0], sa = a[1], la = a[2];
  const std::uint64_t db = b[0], sb = b[1], lb = b[2];

  auto needed_deltas = [&](std::uint64_t u, std::uint64_t t) {
    return std::max(da + deficiency(sa, la, u, t),
                    db + deficiency(sb, lb, u, t));
  };

  // Candidate joins per tail shape (u, t) need exactly needed_deltas(u, t)
  // deltas. For fixed u that count is convex non-increasing in t with
  // slopes -1 or 0, and at most one u can drop below the empty-tail count;
  // the first flat point of that chain is the minimal common multiple.
  const std::uint64_t e0 = needed_deltas(kNone, 0);
  Code join = pack(e0, kNone, 0);
  for (std::uint64_t u : {std::uint64_t{1}, std::uint64_t{2}}) {
    if (needed_deltas(u, 1) >= e0) continue;
    std::uint64_t t = 1;
    while (needed_deltas(u, t + 1) < needed_deltas(u, t)) ++t;
    join = pack(needed_deltas(u, t), u, t);
    break;
  }

  auto left_comp = left_cancel_codes(a, join);
  auto right_comp = left_cancel_codes(b, join);
  if (!left_comp || !right_comp)
    throw InternalInvariantViolation("klein: lcm join not a common multiple");
  return {join, std::move(*left_comp), std::move(*right_comp)};
}

std::optional<Element> KleinMonoid::try_right_cancel(const Element& c,
                                                     const Element& b) const {
  require_same_instance(c, b);
  // Reading words backwards is an anti-automorphism fixing x and y, since
  // both relator sides are palindromes. a*b = c iff rev(b)*rev(a) = rev(c).
  auto rev = [](const Code& code) {
    return pack(code[0], code[2] ? last_letter(code[1], code[2]) : kNone,
                code[2]);
  };
  auto rev_a = left_cancel_codes(rev(b.code()), rev(c.code()));
  if (!rev_a) return std::nullopt;
  Element a = make(rev(*rev_a));
  if (mul(a, b) != c)
    throw InternalInvariantViolation(
        "klein: right_cancel produced a bad quotient");
  return a;
}

std::string render_abelian_image(const AbelianImage& image) {
  return "(" + std::to_string(image.degree) + "," +
         std::to_string(image.parity) + ")";
}

AbelianImage abelianize(const std::vector<SignedLetter>& word) {
  AbelianImage image;
  for (const SignedLetter& letter : word) {
    if (letter.index > 1)
      throw DomainError("abelianize: letter index out of range");
    image.degree += letter.inverse ? -1 : 1;
    if (letter.index == 1) image.parity ^= 1;
  }
  return image;
}

ConjugacyReport certify_nonconjugate(const std::vector<SignedLetter>& a,
                                     const std::vector<SignedLetter>& b) {
  ConjugacyReport report;
  report.left = abelianize(a);
  report.right = abelianize(b);
  report.verdict = report.left == report.right
                       ? ConjugacyVerdict::Inconclusive
                       : ConjugacyVerdict::NonConjugate;
  return report;
}

}  // namespace orefrac
