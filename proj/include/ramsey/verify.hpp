#pragma once

// Fixed end-to-end checklist over every identity, inequality and reference value
// the engine reproduces. Output is deterministic for any thread count.

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

struct VerifyCheck {
  std::string name;
  std::string expected;   // expected value or relation
  std::string source;     // where the expectation comes from
  std::string computed;   // what the engine produced
  std::string tolerance;
  bool passed = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

VerifyReport run_verification();

void print_report(std::ostream& out, const VerifyReport& report);

// True when x rounded to `digits` significant digits equals `printed`.
bool matches_significant_digits(double x, double printed, int digits);

}  // namespace ramsey
