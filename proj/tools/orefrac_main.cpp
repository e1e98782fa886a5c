#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orefrac/braid_monoid.hpp"
#include "orefrac/errors.hpp"
#include "orefrac/fraction.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/monoid_spec.hpp"
#include "orefrac/serialize.hpp"
#include "orefrac/torsion.hpp"
#include "orefrac/verify.hpp"
#include "orefrac/words.hpp"

namespace {

using namespace orefrac;

struct Options {
  std::string monoid;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t pmax = 6;
  std::size_t max_word_len = 64;
  std::size_t bfs_bound = 12;
};

constexpr std::size_t kMaxCliStrands = 8;

std::shared_ptr<const Monoid> open_monoid(const Options& opt) {
  const MonoidSpec spec = parse_monoid_spec(opt.monoid);
  if (spec.kind == MonoidSpec::Kind::braid && spec.parameter > kMaxCliStrands)
    throw ParseError("strand count " + std::to_string(spec.parameter) +
                     " exceeds the CLI cap of " +
                     std::to_string(kMaxCliStrands));
  return make_monoid(spec);
}

void check_word_budget(const std::string& text, std::size_t cap) {
  std::istringstream in(text);
  std::string token;
  std::size_t count = 0;
  while (in >> token) ++count;
  if (count > cap)
    throw ParseError("word has " + std::to_string(count) +
                     " tokens, over the --max-word-len cap of " +
                     std::to_string(cap));
}

Element parse_element(const std::shared_ptr<const Monoid>& m,
                      const std::string& text, const Options& opt) {
  check_word_budget(text, opt.max_word_len);
  return m->element_from_word(parse_word(*m, text));
}

Fraction parse_fraction(const std::shared_ptr<const Monoid>& m,
                        const std::string& text, const Options& opt) {
  check_word_budget(text, opt.max_word_len);
  return eval_signed_word(*m, parse_signed_word(*m, text));
}

/// Braid elements read best as generator words outside normal-form
/// contexts; everything else has a compact canonical rendering.
std::string display(const Element& a) {
  const Monoid& m = a.monoid();
  if (dynamic_cast<const BraidMonoid*>(&m) != nullptr) return m.render_word(a);
  return m.render(a);
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

OracleOptions oracle_options(const Options& opt) {
  OracleOptions oracle;
  oracle.max_word_length = opt.bfs_bound;
  return oracle;
}

int run_nf(const Options& opt, const std::string& word) {
  const auto m = open_monoid(opt);
  const Element a = parse_element(m, word, opt);
  if (opt.json)
    emit_json(element_to_json(a));
  else
    std::cout << m->render(a) << '\n';
  return 0;
}

int run_lcm(const Options& opt, const std::string& word_a,
            const std::string& word_b) {
  const auto m = open_monoid(opt);
  const Element a = parse_element(m, word_a, opt);
  const Element b = parse_element(m, word_b, opt);
  const LcmCertificate cert = m->right_lcm(a, b);
  if (opt.json) {
    emit_json(certificate_to_json(cert));
    return 0;
  }
  std::cout << "join: " << display(cert.join) << '\n';
  std::cout << "left comp: " << display(cert.left_comp) << '\n';
  std::cout << "right comp: " << display(cert.right_comp) << '\n';
  return 0;
}

int run_torsion(const Options& opt, const std::string& word) {
  const auto m = open_monoid(opt);
  const Fraction z = parse_fraction(m, word, opt);
  const TorsionVerdict verdict = torsion_check(z, opt.pmax);
  if (opt.json) {
    emit_json(verdict_to_json(verdict));
    return 0;
  }
  if (verdict.witness) {
    std::cout << "witness order " << verdict.witness->order << '\n';
    std::cout << "conjugator: " << display(verdict.witness->conjugator)
              << '\n';
    std::cout << "torsion: " << display(verdict.witness->torsion) << '\n';
  } else {
    std::cout << "no torsion up to " << verdict.p_max << '\n';
  }
  return 0;
}

int run_verify(const Options& opt, const std::string& suite_text) {
  const auto m = open_monoid(opt);
  const SuiteKind suite = parse_suite(suite_text);
  VerifyOptions vopt;
  vopt.seed = opt.seed;
  vopt.trials = opt.trials;
  vopt.oracle = oracle_options(opt);
  const VerifyReport report = run_suite(m, suite, vopt);
  if (opt.json) {
    nlohmann::json j;
    j["monoid"] = report.monoid;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["lines"] = report.lines;
    j["passed"] = report.passed;
    if (!report.failure.empty()) j["failure"] = report.failure;
    emit_json(j);
  } else {
    std::cout << render_report(report);
  }
  return report.passed ? 0 : 2;
}

int run_conjcheck(const Options& opt, const std::string& word_a,
                  const std::string& word_b) {
  if (!opt.monoid.empty() && opt.monoid != "klein")
    throw ParseError("conjcheck supports only the klein monoid");
  const auto klein = KleinMonoid::create();
  check_word_budget(word_a, opt.max_word_len);
  check_word_budget(word_b, opt.max_word_len);
  const ConjugacyReport report = certify_nonconjugate(
      parse_signed_word(*klein, word_a), parse_signed_word(*klein, word_b));
  if (opt.json) {
    emit_json(conjugacy_report_to_json(report));
    return 0;
  }
  const char* verdict = report.verdict == ConjugacyVerdict::NonConjugate
                            ? "NonConjugate"
                            : "Inconclusive";
  std::cout << verdict << ": images " << render_abelian_image(report.left)
            << " vs " << render_abelian_image(report.right) << '\n';
  return 0;
}

int emit_fraction(const Options& opt, const Fraction& f) {
  if (opt.json)
    emit_json(fraction_to_json(f));
  else
    std::cout << render_fraction(f) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"left-cancellative right-lcm monoids, their groups of "
               "fractions, and constructive torsion checks"};
  app.require_subcommand(1);

  Options opt;
  int rc = 0;

  auto add_common = [&opt](CLI::App* sub, bool monoid_required) {
    auto* monoid =
        sub->add_option("--monoid", opt.monoid,
                        "monoid selector: braid:<n>, klein, nk:<k>, cyclic:<n>");
    if (monoid_required) monoid->required();
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
    sub->add_option("--seed", opt.seed, "deterministic RNG seed");
    sub->add_option("--trials", opt.trials, "sampled trials per suite");
    sub->add_option("--pmax", opt.pmax, "largest torsion order tested");
    sub->add_option("--max-word-len", opt.max_word_len,
                    "input word token cap");
    sub->add_option("--bfs-bound", opt.bfs_bound,
                    "canonical-length ceiling for brute-force oracles");
  };

  std::string word_a;
  std::string word_b;
  std::string suite_text = "all";
  std::int64_t exponent = 1;

  auto* nf = app.add_subcommand("nf", "normalize a positive word");
  add_common(nf, true);
  nf->add_option("word", word_a, "positive generator word")->required();
  nf->callback([&] { rc = run_nf(opt, word_a); });

  auto* lcm = app.add_subcommand("lcm", "right lcm certificate of two words");
  add_common(lcm, true);
  lcm->add_option("wordA", word_a, "first positive word")->required();
  lcm->add_option("wordB", word_b, "second positive word")->required();
  lcm->callback([&] { rc = run_lcm(opt, word_a, word_b); });

  auto* torsion =
      app.add_subcommand("torsion", "torsion verdict for a group word");
  add_common(torsion, true);
  torsion->add_option("word", word_a, "signed generator word")->required();
  torsion->callback([&] { rc = run_torsion(opt, word_a); });

  auto* verify = app.add_subcommand("verify", "run a property suite");
  add_common(verify, true);
  verify->add_option("--suite", suite_text, "uniq, rlcm, eq123, or all");
  verify->callback([&] { rc = run_verify(opt, suite_text); });

  auto* conjcheck = app.add_subcommand(
      "conjcheck", "certify non-conjugacy of two klein group words");
  add_common(conjcheck, false);
  conjcheck->add_option("wordA", word_a, "first signed word")->required();
  conjcheck->add_option("wordB", word_b, "second signed word")->required();
  conjcheck->callback([&] { rc = run_conjcheck(opt, word_a, word_b); });

  auto* frac = app.add_subcommand("frac", "fraction arithmetic");
  frac->require_subcommand(1);

  auto* frac_eval = frac->add_subcommand("eval", "evaluate a signed word");
  add_common(frac_eval, true);
  frac_eval->add_option("word", word_a, "signed generator word")->required();
  frac_eval->callback([&] {
    const auto m = open_monoid(opt);
    rc = emit_fraction(opt, parse_fraction(m, word_a, opt));
  });

  auto* frac_eq = frac->add_subcommand("eq", "compare two signed words");
  add_common(frac_eq, true);
  frac_eq->add_option("wordA", word_a, "first signed word")->required();
  frac_eq->add_option("wordB", word_b, "second signed word")->required();
  frac_eq->callback([&] {
    const auto m = open_monoid(opt);
    const bool equal = fraction_eq(parse_fraction(m, word_a, opt),
                                   parse_fraction(m, word_b, opt));
    if (opt.json) {
      nlohmann::json j;
      j["equal"] = equal;
      emit_json(j);
    } else {
      std::cout << (equal ? "equal" : "not equal") << '\n';
    }
    rc = 0;
  });

  auto* frac_mul = frac->add_subcommand("mul", "multiply two signed words");
  add_common(frac_mul, true);
  frac_mul->add_option("wordA", word_a, "first signed word")->required();
  frac_mul->add_option("wordB", word_b, "second signed word")->required();
  frac_mul->callback([&] {
    const auto m = open_monoid(opt);
    rc = emit_fraction(opt, fraction_mul(parse_fraction(m, word_a, opt),
                                         parse_fraction(m, word_b, opt)));
  });

  auto* frac_inv = frac->add_subcommand("inv", "invert a signed word");
  add_common(frac_inv, true);
  frac_inv->add_option("word", word_a, "signed generator word")->required();
  frac_inv->callback([&] {
    const auto m = open_monoid(opt);
    rc = emit_fraction(opt, fraction_inv(parse_fraction(m, word_a, opt)));
  });

  auto* frac_pow = frac->add_subcommand("pow", "power of a signed word");
  add_common(frac_pow, true);
  frac_pow->add_option("word", word_a, "signed generator word")->required();
  frac_pow->add_option("exponent", exponent, "integer exponent")->required();
  frac_pow->callback([&] {
    const auto m = open_monoid(opt);
    Fraction z = parse_fraction(m, word_a, opt);
    if (exponent < 0) z = fraction_inv(z);
    const std::uint64_t magnitude =
        exponent < 0 ? 0 - static_cast<std::uint64_t>(exponent)
                     : static_cast<std::uint64_t>(exponent);
    rc = emit_fraction(opt, fraction_pow_direct(z, magnitude));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InternalInvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
