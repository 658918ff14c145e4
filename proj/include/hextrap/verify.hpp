#pragma once

// Self-verification suite: every implementation path is compared against its
// independent oracle at pinned scales and tolerances.  Drives the CLI
// `verify` subcommand and the acceptance tests.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hextrap/symmetry.hpp"

namespace hextrap::verify {

struct CheckResult {
  std::string name;
  double deviation = 0.0;  // measured worst-case deviation
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;      // optional context (scales, counts)
};

// Direct six-ray angular sums against a closed-form provider for all tag
// pairs with mu, mu' <= mu_max.  Exposed so tests can run it against a
// deliberately corrupted table as a negative control.
CheckResult angular_check(const std::function<double(Tag, int, Tag, int)>& closed_form,
                          int mu_max);

// quick = reduced truncations (n_tilde <= 8 scale), intended to finish in
// a few seconds; the full suite covers the certified ranges.
std::vector<CheckResult> run_all(bool quick);

bool all_passed(const std::vector<CheckResult>& results);

void write_report_json(std::ostream& os, const std::vector<CheckResult>& results, bool quick);

}  // namespace hextrap::verify
