#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Malformed user input: bad permutations, group specs, mismatched groups.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration or brute-force budget would be exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (e.g. quotient by a non-normal subgroup).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bound formula was evaluated outside its stated domain.
class RangeError : public std::domain_error {
 public:
  RangeError(std::string gate, const std::string& detail)
      : std::domain_error(gate + ": " + detail), gate_(std::move(gate)) {}
  const std::string& gate() const { return gate_; }

 private:
  std::string gate_;
};

// A claimed identity failed on concrete data. Carries a human readable report.
class FalsificationError : public std::runtime_error {
 public:
  explicit FalsificationError(const std::string& report)
      : std::runtime_error("falsification: " + report), report_(report) {}
  const std::string& report() const { return report_; }

 private:
  std::string report_;
};

}  // namespace artin
