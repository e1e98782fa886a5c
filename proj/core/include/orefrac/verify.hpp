#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orefrac/monoid.hpp"
#include "orefrac/oracle.hpp"

namespace orefrac {

/// Property suites runnable against any monoid instance:
///   uniq  - the set of right lcm's is exactly the unit multiples of the
///           certificate join (exhaustive on finite non-graded instances,
///           minimal-common-multiple uniqueness on graded ones);
///   rlcm  - two-step complements compose to the certificate of (x, y1 y2);
///   eq123 - the chain identities and power formula for sampled fractions;
///   all   - the three above in order.
enum class SuiteKind { uniq, rlcm, eq123, all };

/// Throws ParseError on anything but "uniq", "rlcm", "eq123", "all".
SuiteKind parse_suite(const std::string& text);

std::string suite_name(SuiteKind suite);

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t sample_length = 4;  // canonical-length cap for sampled elements
  OracleOptions oracle;
};

/// Deterministic for fixed monoid, suite, and options: the body lines and
/// the rendered report are byte-stable across runs and platforms.
struct VerifyReport {
  std::string monoid;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool passed = true;
  std::vector<std::string> lines;  // one summary line per suite ran
  std::string failure;             // first failing reproduction, else empty
};

VerifyReport run_suite(const std::shared_ptr<const Monoid>& m, SuiteKind suite,
                       const VerifyOptions& opt = {});

std::string render_report(const VerifyReport& report);

}  // namespace orefrac
