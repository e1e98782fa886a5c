#include "orefrac/torsion.hpp"

#include <algorithm>
#include <string>

namespace orefrac {

namespace {

Element product_range(const std::vector<Element>& parts, std::size_t begin,
                      std::size_t end) {
  const Monoid& m = parts.front().monoid();
  Element acc = m.one();
  for (std::size_t i = begin; i < end; ++i) acc = m.mul(acc, parts[i]);
  return acc;
}

void require_pairs(const PairSequence& seq, std::size_t needed) {
  if (seq.xs.size() < needed)
    throw InsufficientPairs("pair sequence has " +
                            std::to_string(seq.xs.size()) + " pairs, needs " +
                            std::to_string(needed));
}

// Whether candidate equals join times a right unit, i.e. is itself a
// right lcm whenever join is one.
bool equal_up_to_right_unit(const Element& join, const Element& candidate) {
  const Monoid& m = join.monoid();
  auto u = m.try_left_cancel(join, candidate);
  return u && m.is_unit(*u);
}

Element monoid_pow(const Element& a, std::size_t k) {
  const Monoid& m = a.monoid();
  Element acc = m.one();
  for (std::size_t i = 0; i < k; ++i) acc = m.mul(acc, a);
  return acc;
}

}  // namespace

PairSequence build_pairs(const Fraction& z, std::size_t count) {
  if (count < 1) throw DomainError("build_pairs: count must be >= 1");
  const Monoid& m = z.num.monoid();
  m.require_same_instance(z.num, z.den);
  PairSequence seq;
  seq.xs.push_back(z.num);
  seq.ys.push_back(z.den);
  for (std::size_t i = 1; i < count; ++i) {
    LcmCertificate cert = m.right_lcm(seq.xs.back(), seq.ys.back());
    // x_i y_{i+1} = y_i x_{i+1}: the new x is the complement on the y
    // side, the new y the complement on the x side.
    seq.xs.push_back(cert.right_comp);
    seq.ys.push_back(cert.left_comp);
    seq.certs.push_back(std::move(cert));
  }
  return seq;
}

bool check_eq1(const PairSequence& seq, std::size_t k, std::size_t l,
               const OracleOptions* oracle) {
  if (k < 1 || l < 1) throw DomainError("check_eq1: k and l must be >= 1");
  require_pairs(seq, k + l);
  const Monoid& m = seq.xs.front().monoid();

  const Element head_x = product_range(seq.xs, 0, k);
  const Element head_y = product_range(seq.ys, 0, l);
  const Element lhs = m.mul(head_x, product_range(seq.ys, k, k + l));
  const Element rhs = m.mul(head_y, product_range(seq.xs, l, l + k));
  if (lhs != rhs) return false;

  // The common value must be a right lcm of the two head products.
  const LcmCertificate cert = m.right_lcm(head_x, head_y);
  if (!equal_up_to_right_unit(cert.join, lhs)) return false;

  if (oracle) {
    std::vector<Element> found = lcm_set(head_x, head_y, *oracle);
    if (!std::binary_search(found.begin(), found.end(), lhs)) return false;
  }
  return true;
}

bool check_eq2(const PairSequence& seq, const Fraction& z, std::size_t k) {
  require_pairs(seq, k + 1);
  const Monoid& m = seq.xs.front().monoid();
  const Fraction conj{product_range(seq.xs, 0, k), m.one()};
  const Fraction inner{seq.xs[k], seq.ys[k]};
  const Fraction rhs =
      fraction_mul(fraction_mul(conj, inner), fraction_inv(conj));
  return fraction_eq(rhs, z);
}

bool check_eq3(const PairSequence& seq, const Fraction& z, std::size_t k) {
  require_pairs(seq, k);
  const Fraction direct = fraction_pow_direct(z, k);
  const Fraction chained{product_range(seq.xs, 0, k),
                         product_range(seq.ys, 0, k)};
  return fraction_eq(direct, chained);
}

TorsionVerdict torsion_check(const Fraction& z, std::size_t p_max) {
  if (p_max < 1) throw DomainError("torsion_check: p_max must be >= 1");
  const Monoid& m = z.num.monoid();
  const PairSequence seq = build_pairs(z, p_max + 1);

  Element prod_x = m.one();
  Element prod_y = m.one();
  for (std::size_t p = 1; p <= p_max; ++p) {
    prod_x = m.mul(prod_x, seq.xs[p - 1]);
    prod_y = m.mul(prod_y, seq.ys[p - 1]);
    if (prod_x != prod_y) continue;

    // z^p = 1. The next y must be invertible; x_{p+1} y_{p+1}^{-1} is
    // then a monoid element, the torsion part of z.
    const Element& y_next = seq.ys[p];
    if (!m.is_unit(y_next))
      throw InternalInvariantViolation(
          m.name() + ": z^" + std::to_string(p) +
          " = 1 but the next chain denominator is not a unit");
    const Element t = m.mul(seq.xs[p], *m.unit_inverse(y_next));

    TorsionWitness witness{p, prod_x, t};
    if (monoid_pow(t, p) != m.one())
      throw InternalInvariantViolation(
          m.name() + ": witness torsion element does not have order " +
          std::to_string(p));
    const Fraction conj{witness.conjugator, m.one()};
    const Fraction conjugated =
        fraction_mul(fraction_mul(conj, Fraction{t, m.one()}),
                     fraction_inv(conj));
    if (!fraction_eq(conjugated, z))
      throw InternalInvariantViolation(
          m.name() + ": witness does not conjugate back to z");
    return {p_max, std::move(witness)};
  }
  return {p_max, std::nullopt};
}

}  // namespace orefrac
