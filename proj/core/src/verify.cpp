#include "orefrac/verify.hpp"

#include <algorithm>
#include <sstream>

#include "orefrac/errors.hpp"
#include "orefrac/sampling.hpp"
#include "orefrac/torsion.hpp"

namespace orefrac {

namespace {

constexpr std::size_t kExhaustivePairCap = 4096;

std::uint64_t suite_tag(SuiteKind suite) {
  switch (suite) {
    case SuiteKind::uniq:
      return 0x756e6971ull;
    case SuiteKind::rlcm:
      return 0x726c636dull;
    case SuiteKind::eq123:
      return 0x65713132ull;
    case SuiteKind::all:
      return 0x616c6cull;
  }
  return 0;
}

/// Draws elements either freely (graded: random bounded products of
/// generators) or from the finite closure (non-graded), so that every
/// residue of a cyclic instance is reachable.
struct Sampler {
  const std::shared_ptr<const Monoid>& m;
  std::size_t max_length;
  std::vector<Element> pool;  // nonempty iff the instance is not graded

  Sampler(const std::shared_ptr<const Monoid>& monoid,
          const VerifyOptions& opt)
      : m(monoid), max_length(opt.sample_length) {
    if (!m->is_graded()) pool = enumerate_elements(*m, opt.oracle);
  }

  Element draw(Rng& rng) const {
    if (!pool.empty()) return pool[rng.below(pool.size())];
    return random_element_up_to(*m, rng, max_length);
  }
};

bool equal_up_to_right_unit(const Monoid& m, const Element& a,
                            const Element& b) {
  auto q = m.try_left_cancel(a, b);
  return q && m.is_unit(*q);
}

std::string pair_repro(const Monoid& m, const char* suite, std::size_t trial,
                       const char* what, const Element& x, const Element& y) {
  std::ostringstream out;
  out << suite << " trial " << trial << ": " << what << " for x = "
      << m.render_word(x) << ", y = " << m.render_word(y);
  return out.str();
}

void run_uniq(const Sampler& sampler, const VerifyOptions& opt,
              VerifyReport& report) {
  const Monoid& m = *sampler.m;
  Rng rng(opt.seed ^ suite_tag(SuiteKind::uniq));

  if (!sampler.pool.empty() &&
      sampler.pool.size() * sampler.pool.size() <= kExhaustivePairCap) {
    std::size_t set_size = 0;
    std::size_t pairs = 0;
    const std::vector<Element> us = m.units();
    for (const Element& x : sampler.pool) {
      for (const Element& y : sampler.pool) {
        ++pairs;
        const LcmCertificate cert = m.right_lcm(x, y);
        std::vector<Element> expected;
        expected.reserve(us.size());
        for (const Element& u : us) expected.push_back(m.mul(cert.join, u));
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()),
                       expected.end());
        const std::vector<Element> found = lcm_set(x, y, opt.oracle);
        set_size = std::max(set_size, found.size());
        if (found != expected) {
          report.passed = false;
          report.failure = pair_repro(
              m, "uniq", pairs, "lcm set differs from unit multiples of the join",
              x, y);
          return;
        }
      }
    }
    std::ostringstream line;
    line << "uniq: exhaustive over " << pairs << " pairs, lcm-set size "
         << set_size;
    report.lines.push_back(line.str());
    return;
  }

  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Element x = sampler.draw(rng);
    const Element y = sampler.draw(rng);
    const LcmCertificate cert = m.right_lcm(x, y);
    const std::vector<Element> mins = minimal_common_multiples(x, y, opt.oracle);
    if (mins.size() != 1 || mins.front() != cert.join) {
      report.passed = false;
      report.failure = pair_repro(
          m, "uniq", t, "minimal common multiple not the unique certificate join",
          x, y);
      return;
    }
  }
  std::ostringstream line;
  line << "uniq: " << opt.trials
       << " sampled pairs, minimal common multiple unique and equal to the join";
  report.lines.push_back(line.str());
}

void run_rlcm(const Sampler& sampler, const VerifyOptions& opt,
              VerifyReport& report) {
  const Monoid& m = *sampler.m;
  Rng rng(opt.seed ^ suite_tag(SuiteKind::rlcm));

  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Element x = sampler.draw(rng);
    const Element y1 = sampler.draw(rng);
    const Element y2 = sampler.draw(rng);
    const LcmCertificate c1 = m.right_lcm(x, y1);
    const LcmCertificate c2 = m.right_lcm(c1.right_comp, y2);
    const Element lhs = m.mul(x, m.mul(c1.left_comp, c2.left_comp));
    const Element rhs = m.mul(m.mul(y1, y2), c2.right_comp);
    if (lhs != rhs) {
      report.passed = false;
      report.failure = pair_repro(
          m, "rlcm", t, "composed complements disagree", x, m.mul(y1, y2));
      return;
    }
    const LcmCertificate direct = m.right_lcm(x, m.mul(y1, y2));
    if (!equal_up_to_right_unit(m, direct.join, lhs)) {
      report.passed = false;
      report.failure = pair_repro(
          m, "rlcm", t, "composed join not a unit multiple of the direct join",
          x, m.mul(y1, y2));
      return;
    }
  }
  std::ostringstream line;
  line << "rlcm: " << opt.trials
       << " triples, composed complements match the direct certificate up to "
          "right units";
  report.lines.push_back(line.str());
}

void run_eq123(const Sampler& sampler, const VerifyOptions& opt,
               VerifyReport& report) {
  const Monoid& m = *sampler.m;
  Rng rng(opt.seed ^ suite_tag(SuiteKind::eq123));

  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Element num = sampler.draw(rng);
    const Element den = sampler.draw(rng);
    const Fraction z = make_fraction(num, den);
    const PairSequence seq = build_pairs(z, 8);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t l = 1; l <= 3; ++l) {
        if (!check_eq1(seq, k, l)) {
          report.passed = false;
          report.failure =
              pair_repro(m, "eq123", t, "chain lcm identity failed", num, den);
          return;
        }
      }
      if (!check_eq2(seq, z, k)) {
        report.passed = false;
        report.failure =
            pair_repro(m, "eq123", t, "conjugation identity failed", num, den);
        return;
      }
    }
    for (std::size_t k = 1; k <= 6; ++k) {
      if (!check_eq3(seq, z, k)) {
        report.passed = false;
        report.failure =
            pair_repro(m, "eq123", t, "power identity failed", num, den);
        return;
      }
    }
  }
  std::ostringstream line;
  line << "eq123: " << opt.trials
       << " fractions, identities verified for k, l <= 3 and powers to 6";
  report.lines.push_back(line.str());
}

}  // namespace

SuiteKind parse_suite(const std::string& text) {
  if (text == "uniq") return SuiteKind::uniq;
  if (text == "rlcm") return SuiteKind::rlcm;
  if (text == "eq123") return SuiteKind::eq123;
  if (text == "all") return SuiteKind::all;
  throw ParseError("unknown verify suite '" + text + "'");
}

std::string suite_name(SuiteKind suite) {
  switch (suite) {
    case SuiteKind::uniq:
      return "uniq";
    case SuiteKind::rlcm:
      return "rlcm";
    case SuiteKind::eq123:
      return "eq123";
    case SuiteKind::all:
      return "all";
  }
  return "?";
}

VerifyReport run_suite(const std::shared_ptr<const Monoid>& m, SuiteKind suite,
                       const VerifyOptions& opt) {
  VerifyReport report;
  report.monoid = m->name();
  report.suite = suite_name(suite);
  report.seed = opt.seed;
  report.trials = opt.trials;

  const Sampler sampler(m, opt);
  const bool run_all = suite == SuiteKind::all;
  if (run_all || suite == SuiteKind::uniq) run_uniq(sampler, opt, report);
  if (report.passed && (run_all || suite == SuiteKind::rlcm))
    run_rlcm(sampler, opt, report);
  if (report.passed && (run_all || suite == SuiteKind::eq123))
    run_eq123(sampler, opt, report);
  return report;
}

std::string render_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "monoid: " << report.monoid << '\n';
  out << "suite: " << report.suite << '\n';
  out << "seed: " << report.seed << '\n';
  out << "trials: " << report.trials << '\n';
  for (const std::string& line : report.lines) out << line << '\n';
  if (!report.failure.empty()) out << "failure: " << report.failure << '\n';
  out << "result: " << (report.passed ? "pass" : "FAIL") << '\n';
  return out.str();
}

}  // namespace orefrac
