#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orefrac/errors.hpp"

namespace orefrac {

/// A positive braid word as 0-based generator indices (letter i is s(i+1)).
using Letters = std::vector<std::size_t>;

/// Base steps allowed per reversing computation before StepBoundExceeded.
/// Generous for desk scale; braid reversing always terminates, the cap
/// guards presentations where it might not.
inline constexpr std::size_t kReversingStepCap = 4'000'000;

/// The complement s\t with s*(s\t) = t*(t\s) = right lcm of the letters:
/// empty for s = t, the two-letter word t s for |s-t| = 1, and t alone
/// for |s-t| >= 2.
Letters letter_complement(std::size_t s, std::size_t t);

/// Both word complements (u\v, v\u), satisfying u*(u\v) = v*(v\u) =
/// right lcm of u and v. Computed by peeling letters:
///   (a u')\v = u'\(a\v)          v\(a u') = (v\a) ((a\v)\u')
/// with the letter table at the base. Decrements *budget per base step
/// and throws StepBoundExceeded when it runs out.
std::pair<Letters, Letters> word_complement(const Letters& u,
                                            const Letters& v,
                                            std::size_t* budget);

/// Rectangular reversing diagram for den^-1 * num. Row i is labeled by
/// den[i], column j by num[j]; the cell at (i, j) replaces L^-1 T (left
/// edge L, top edge T) by (L\T)(T\L)^-1, writing L\T on its bottom edge
/// and T\L on its right edge. Filling all cells turns den^-1 * num into
/// pos() * neg()^-1 with
///   num * pos() = den * neg() = right lcm of num and den.
class ReversingGrid {
public:
  ReversingGrid(std::size_t strands, Letters den, Letters num,
                std::size_t step_cap = kReversingStepCap);

  std::size_t rows() const { return den_.size(); }
  std::size_t cols() const { return num_.size(); }
  const Letters& den() const { return den_; }
  const Letters& num() const { return num_; }

  /// Vertical edge at column boundary j (0..cols) spanning row i; column 0
  /// holds the single den letters.
  const Letters& vertical(std::size_t i, std::size_t j) const;
  /// Horizontal edge at row boundary i (0..rows) spanning column j; row 0
  /// holds the single num letters.
  const Letters& horizontal(std::size_t i, std::size_t j) const;

  /// Right boundary, read downward: the complement num\den.
  Letters pos() const;
  /// Bottom boundary, read rightward: the complement den\num.
  Letters neg() const;

private:
  std::size_t strands_;
  Letters den_, num_;
  // vert_[j][i] and horiz_[i][j], indexed as in vertical()/horizontal().
  std::vector<std::vector<Letters>> vert_, horiz_;
};

struct ReversingResult {
  Letters pos;  // num * pos = lcm(num, den)
  Letters neg;  // den * neg = lcm(num, den)
};

/// Grid reversing without keeping the grid.
ReversingResult reverse_word(std::size_t strands, const Letters& den,
                             const Letters& num,
                             std::size_t step_cap = kReversingStepCap);

}  // namespace orefrac
