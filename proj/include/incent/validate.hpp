#ifndef INCENT_VALIDATE_HPP
#define INCENT_VALIDATE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace incent {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Full numerical validation suite; each entry is one independently checkable
// claim about the implementation (closed forms, phase constants, limits,
// bounds, identities, the stochastic oracle, sign-change counts).
std::vector<CriterionResult> run_acceptance_criteria(int threads = 1);

// One line per criterion; returns true when everything passed.
bool print_acceptance_report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace incent

#endif  // INCENT_VALIDATE_HPP
