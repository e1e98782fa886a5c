#include "orefrac/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace orefrac {

namespace {

using ElementSet = std::unordered_set<Element, ElementHash>;

std::vector<Element> sorted(const ElementSet& set) {
  std::vector<Element> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

void guard_size(std::size_t size, const OracleOptions& opt) {
  if (size > opt.max_elements)
    throw SearchBoundExceeded("oracle exceeded its element budget");
}

// Right multiples of the seed, grown by one generator at a time up to the
// length bound. Graded instances only: each step adds exactly one letter.
ElementSet grow_multiples(const Element& seed, std::size_t bound,
                          const OracleOptions& opt) {
  const Monoid& m = seed.monoid();
  ElementSet seen;
  if (m.canonical_length(seed) > bound) return seen;
  std::vector<Element> frontier{seed};
  seen.insert(seed);
  const auto gens = m.generators();
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& e : frontier) {
      if (m.canonical_length(e) >= bound) continue;
      for (const Element& g : gens) {
        Element f = m.mul(e, g);
        if (seen.insert(f).second) next.push_back(f);
      }
    }
    guard_size(seen.size(), opt);
    frontier = std::move(next);
  }
  return seen;
}

// Full submonoid generated by the generators; terminates only when it is
// finite, otherwise the element budget fires.
ElementSet closure(const Monoid& m, const OracleOptions& opt) {
  ElementSet seen;
  std::vector<Element> frontier{m.one()};
  seen.insert(m.one());
  const auto gens = m.generators();
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& e : frontier)
      for (const Element& g : gens) {
        Element f = m.mul(e, g);
        if (seen.insert(f).second) next.push_back(f);
      }
    guard_size(seen.size(), opt);
    frontier = std::move(next);
  }
  return seen;
}

ElementSet multiples_over_closure(const Element& a, const ElementSet& all) {
  const Monoid& m = a.monoid();
  ElementSet out;
  for (const Element& e : all) out.insert(m.mul(a, e));
  return out;
}

}  // namespace

std::vector<Element> enumerate_elements(const Monoid& m,
                                        const OracleOptions& opt) {
  if (m.is_graded()) return sorted(grow_multiples(m.one(), opt.max_word_length, opt));
  return sorted(closure(m, opt));
}

std::vector<Element> right_multiples_up_to(const Element& a, std::size_t bound,
                                           const OracleOptions& opt) {
  const Monoid& m = a.monoid();
  if (m.is_graded()) return sorted(grow_multiples(a, bound, opt));
  return sorted(multiples_over_closure(a, closure(m, opt)));
}

std::vector<Element> common_right_multiples(const Element& a, const Element& b,
                                            std::size_t bound,
                                            const OracleOptions& opt) {
  a.monoid().require_same_instance(a, b);
  std::vector<Element> ma = right_multiples_up_to(a, bound, opt);
  std::vector<Element> mb = right_multiples_up_to(b, bound, opt);
  std::vector<Element> out;
  std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Element> minimal_common_multiples(const Element& a,
                                              const Element& b,
                                              const OracleOptions& opt) {
  const Monoid& m = a.monoid();
  m.require_same_instance(a, b);
  if (!m.is_graded())
    throw DomainError(m.name() +
                      ": minimal_common_multiples needs a graded instance");

  struct Growth {
    ElementSet seen;
    std::vector<Element> frontier;
  };
  auto start = [&](const Element& seed) {
    Growth g;
    g.seen.insert(seed);
    g.frontier.push_back(seed);
    return g;
  };
  const auto gens = m.generators();
  auto advance = [&](Growth& g) {
    std::vector<Element> next;
    for (const Element& e : g.frontier)
      for (const Element& gen : gens) {
        Element f = m.mul(e, gen);
        if (g.seen.insert(f).second) next.push_back(f);
      }
    guard_size(g.seen.size(), opt);
    g.frontier = std::move(next);
  };

  Growth ga = start(a);
  Growth gb = start(b);
  std::size_t la = m.canonical_length(a);
  std::size_t lb = m.canonical_length(b);
  if (std::max(la, lb) > opt.max_word_length)
    throw SearchBoundExceeded(m.name() +
                              ": no common multiple within the word bound");
  // Bring both sets up to the same length, then step in lock-step; the
  // first nonempty intersection is exactly the minimal common layer.
  for (std::size_t len = la; len < std::max(la, lb); ++len) advance(ga);
  for (std::size_t len = lb; len < std::max(la, lb); ++len) advance(gb);
  for (std::size_t len = std::max(la, lb);; ++len) {
    ElementSet inter;
    const ElementSet& small = ga.seen.size() <= gb.seen.size() ? ga.seen : gb.seen;
    const ElementSet& large = ga.seen.size() <= gb.seen.size() ? gb.seen : ga.seen;
    for (const Element& e : small)
      if (large.count(e)) inter.insert(e);
    if (!inter.empty()) return sorted(inter);
    if (len >= opt.max_word_length)
      throw SearchBoundExceeded(m.name() +
                                ": no common multiple within the word bound");
    advance(ga);
    advance(gb);
  }
}

std::vector<Element> lcm_set(const Element& a, const Element& b,
                             const OracleOptions& opt) {
  const Monoid& m = a.monoid();
  m.require_same_instance(a, b);
  std::vector<Element> cm;
  std::size_t bound = 0;
  if (m.is_graded()) {
    std::vector<Element> mins = minimal_common_multiples(a, b, opt);
    const std::size_t first_layer = m.canonical_length(mins.front());
    bound = std::min(first_layer + opt.lcm_slack, opt.max_word_length);
    cm = common_right_multiples(a, b, bound, opt);
  } else {
    const ElementSet all = closure(m, opt);
    const ElementSet ma = multiples_over_closure(a, all);
    const ElementSet mb = multiples_over_closure(b, all);
    for (const Element& e : ma)
      if (mb.count(e)) cm.push_back(e);
    std::sort(cm.begin(), cm.end());
  }

  // Keep the common multiples dividing every common multiple found, with
  // division decided by membership in the searched multiple sets.
  std::vector<Element> out;
  for (const Element& z : cm) {
    ElementSet mult_z = m.is_graded()
                            ? grow_multiples(z, bound, opt)
                            : multiples_over_closure(z, closure(m, opt));
    bool divides_all = true;
    for (const Element& w : cm)
      if (!mult_z.count(w)) {
        divides_all = false;
        break;
      }
    if (divides_all) out.push_back(z);
  }
  return out;
}

bool lcm_set_matches_units(const Element& a, const Element& b,
                           const OracleOptions& opt) {
  const Monoid& m = a.monoid();
  std::vector<Element> found = lcm_set(a, b, opt);
  const Element join = m.right_lcm(a, b).join;
  std::vector<Element> expected;
  for (const Element& u : m.units()) expected.push_back(m.mul(join, u));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()),
                 expected.end());
  return found == expected;
}

std::optional<Element> bfs_left_quotient(const Element& a, const Element& c,
                                         const OracleOptions& opt) {
  const Monoid& m = a.monoid();
  m.require_same_instance(a, c);
  if (m.is_graded()) {
    const std::size_t la = m.canonical_length(a);
    const std::size_t lc = m.canonical_length(c);
    if (la > lc) return std::nullopt;
    for (const Element& w : sorted(grow_multiples(m.one(), lc - la, opt)))
      if (m.mul(a, w) == c) return w;
    return std::nullopt;
  }
  for (const Element& w : sorted(closure(m, opt)))
    if (m.mul(a, w) == c) return w;
  return std::nullopt;
}

std::vector<Element> oracle_units(const Monoid& m, const OracleOptions& opt) {
  if (m.is_graded()) return {m.one()};
  const ElementSet all = closure(m, opt);
  const Element one = m.one();
  ElementSet units;
  for (const Element& u : all)
    for (const Element& v : all)
      if (m.mul(u, v) == one && m.mul(v, u) == one) {
        units.insert(u);
        break;
      }
  return sorted(units);
}

}  // namespace orefrac
