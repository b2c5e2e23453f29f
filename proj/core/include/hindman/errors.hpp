#pragma once

#include <stdexcept>

namespace hindman {

// Error taxonomy shared by every module. The CLI maps these onto its
// exit-code contract (input errors -> 3, infeasible -> 1, budget -> 2).

// A value outside an operation's mathematical domain (empty set to exp2, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed or mismatched inputs (wrong coloring kind, bad file, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation was invoked before its prerequisites were established.
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

// A construction cannot succeed with the supplied parameters (e.g. a row
// selection that does not fit in its interval). Not a bug: the caller chose
// parameters below what the recursion demands.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search or oracle resolution ran out of its node budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant that should be unreachable failed. Kept as a real
// exception so tests can exercise the checks.
struct ConstructionBugError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hindman
