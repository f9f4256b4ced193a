#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace eriordan::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct Report {
  std::vector<Check> checks;

  bool all_passed() const;
  void append(const Report& other);
  /// One "PASS name" / "FAIL name" line per check; failures also show
  /// expected and actual values.
  void print(std::ostream& os) const;
};

Report verify_thm1(std::size_t order);
Report verify_thm2(std::size_t order);
Report verify_examples(std::size_t order);
Report verify_all(std::size_t order);

}  // namespace eriordan::verify
