#include "orefrac/reversing.hpp"

#include <string>

namespace orefrac {

namespace {

void check_input(std::size_t strands, const Letters& word) {
  if (strands < 2) throw DomainError("reversing: need at least 2 strands");
  for (std::size_t letter : word)
    if (letter + 1 >= strands)
      throw DomainError("reversing: generator s" + std::to_string(letter + 1) +
                        " out of range for " + std::to_string(strands) +
                        " strands");
}

void tick(std::size_t* budget) {
  if (*budget == 0)
    throw StepBoundExceeded("reversing exceeded its step cap");
  --*budget;
}

Letters concat(Letters a, const Letters& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Letters letter_complement(std::size_t s, std::size_t t) {
  if (s == t) return {};
  const std::size_t gap = s > t ? s - t : t - s;
  if (gap == 1) return {t, s};
  return {t};
}

std::pair<Letters, Letters> word_complement(const Letters& u,
                                            const Letters& v,
                                            std::size_t* budget) {
  if (u.empty()) return {v, {}};
  if (v.empty()) return {{}, u};
  if (u.size() == 1 && v.size() == 1) {
    tick(budget);
    return {letter_complement(u[0], v[0]), letter_complement(v[0], u[0])};
  }
  if (u.size() >= 2) {
    const Letters head{u[0]};
    const Letters rest(u.begin() + 1, u.end());
    auto [head_v, v_head] = word_complement(head, v, budget);
    auto [uv, head_v_rest] = word_complement(rest, head_v, budget);
    return {std::move(uv), concat(std::move(v_head), head_v_rest)};
  }
  // u is a single letter, v = b v2.
  const Letters head{v[0]};
  const Letters rest(v.begin() + 1, v.end());
  auto [u_head, head_u] = word_complement(u, head, budget);
  auto [head_u_rest, vu] = word_complement(head_u, rest, budget);
  return {concat(std::move(u_head), head_u_rest), std::move(vu)};
}

ReversingGrid::ReversingGrid(std::size_t strands, Letters den, Letters num,
                             std::size_t step_cap)
    : strands_(strands), den_(std::move(den)), num_(std::move(num)) {
  check_input(strands_, den_);
  check_input(strands_, num_);
  std::size_t budget = step_cap;
  vert_.assign(cols() + 1, std::vector<Letters>(rows()));
  horiz_.assign(rows() + 1, std::vector<Letters>(cols()));
  for (std::size_t i = 0; i < rows(); ++i) vert_[0][i] = {den_[i]};
  for (std::size_t j = 0; j < cols(); ++j) horiz_[0][j] = {num_[j]};
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      auto [bottom, right] =
          word_complement(vert_[j][i], horiz_[i][j], &budget);
      horiz_[i + 1][j] = std::move(bottom);
      vert_[j + 1][i] = std::move(right);
    }
  }
}

const Letters& ReversingGrid::vertical(std::size_t i, std::size_t j) const {
  return vert_.at(j).at(i);
}

const Letters& ReversingGrid::horizontal(std::size_t i, std::size_t j) const {
  return horiz_.at(i).at(j);
}

Letters ReversingGrid::pos() const {
  Letters out;
  for (std::size_t i = 0; i < rows(); ++i)
    out = concat(std::move(out), vert_[cols()][i]);
  return out;
}

Letters ReversingGrid::neg() const {
  Letters out;
  for (std::size_t j = 0; j < cols(); ++j)
    out = concat(std::move(out), horiz_[rows()][j]);
  return out;
}

ReversingResult reverse_word(std::size_t strands, const Letters& den,
                             const Letters& num, std::size_t step_cap) {
  check_input(strands, den);
  check_input(strands, num);
  std::size_t budget = step_cap;
  auto [neg, pos] = word_complement(den, num, &budget);
  return {std::move(pos), std::move(neg)};
}

}  // namespace orefrac
