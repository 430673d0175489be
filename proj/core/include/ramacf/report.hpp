#pragma once

#include <string>
#include <vector>

namespace ramacf {

// Outcome of one identity check. Values are serialized as decimal strings
// (at most 50 digits) so no precision is lost through the JSON layer.
struct Report {
  std::string case_name;
  std::string category;
  std::string lhs;
  std::string rhs;
  std::string abs_error;
  std::string rel_error;
  long precision_bits = 0;
  std::string status;  // pass | fail | not-found | flagged
  std::string notes;

  bool passed() const { return status == "pass"; }
};

class BigReal;

/// Two-route comparison formatted as a Report; status pass iff |lhs-rhs| < tol.
Report compare_report(std::string name, std::string category, const BigReal& lhs,
                      const BigReal& rhs, const BigReal& tol, long precision_bits,
                      std::string notes = "");

}  // namespace ramacf
