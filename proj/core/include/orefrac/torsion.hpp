#pragma once

#include <optional>

#include "orefrac/fraction.hpp"
#include "orefrac/oracle.hpp"

namespace orefrac {

/// The chain (x1,y1), (x2,y2), ... grown from z = x1 y1^{-1}: each next
/// pair is read off a right-lcm certificate of the previous one, so that
/// x_i y_{i+1} = y_i x_{i+1} = certs[i].join.
struct PairSequence {
  std::vector<Element> xs;
  std::vector<Element> ys;
  std::vector<LcmCertificate> certs;  // certs[i] links pair i to pair i+1
};

/// pairs[0] = (num z, den z); count >= 1 pairs in total.
PairSequence build_pairs(const Fraction& z, std::size_t count);

/// x1..xk y_{k+1}..y_{k+l} = y1..yl x_{l+1}..x_{l+k}, and the common value
/// is a right lcm of (x1..xk, y1..yl): compared with the instance lcm up
/// to right units always, and against the exhaustive oracle when oracle
/// options are supplied (desk scale only).
bool check_eq1(const PairSequence& seq, std::size_t k, std::size_t l,
               const OracleOptions* oracle = nullptr);

/// z = (x1..xk)(x_{k+1} y_{k+1}^{-1})(x1..xk)^{-1} as fractions.
bool check_eq2(const PairSequence& seq, const Fraction& z, std::size_t k);

/// z^k = (x1..xk)(y1..yk)^{-1}, the power computed independently by
/// repeated fraction multiplication.
bool check_eq3(const PairSequence& seq, const Fraction& z, std::size_t k);

/// Constructive witness that z has finite order: z = conjugator * torsion
/// * conjugator^{-1} with both parts in the monoid and torsion^order = 1.
struct TorsionWitness {
  std::size_t order = 1;  // least p with z^p = 1
  Element conjugator;     // x1..xp
  Element torsion;        // x_{p+1} times the unit inverse of y_{p+1}
};

/// Either a witness, or the certificate that z^q != 1 for 1 <= q <= p_max
/// (p_max is meaningful in the no-witness case).
struct TorsionVerdict {
  std::size_t p_max = 0;
  std::optional<TorsionWitness> witness;
};

/// Builds p_max + 1 pairs and tests z^p = 1 for each p <= p_max through
/// the monoid equality x1..xp = y1..yp. At the least hit, y_{p+1} must be
/// a unit; the returned witness is fully rechecked (torsion in M,
/// torsion^order = 1, conjugation equality as fractions), and any failure
/// of those facts aborts with InternalInvariantViolation.
TorsionVerdict torsion_check(const Fraction& z, std::size_t p_max);

}  // namespace orefrac
