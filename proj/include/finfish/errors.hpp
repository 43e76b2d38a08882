#ifndef FINFISH_ERRORS_HPP
#define FINFISH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finfish {

// Input or intermediate data violates a structural invariant of the cell
// surface, the grammar, or a tree.
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration grew past its configured object budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation did not divide exactly. Counting formulas and series
// divisions are exact by construction, so this is always a transcription bug.
class ExactnessError : public std::runtime_error {
 public:
  explicit ExactnessError(const std::string& what) : std::runtime_error(what) {}
};

// A fixed-point solve changed a coefficient that an earlier iteration had
// already determined.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Bad command-line arguments or parameters.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finfish

#endif  // FINFISH_ERRORS_HPP
