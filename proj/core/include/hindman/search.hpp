#pragma once

#include <cstdint>
#include <optional>

#include "hindman/core.hpp"
#include "hindman/witness.hpp"

namespace hindman {

struct SearchBudget {
  std::uint32_t max_k = 32;             // deepest interval / ground size tried
  std::uint64_t max_nodes = 50'000'000; // DFS node limit (naive: colorings)
  std::uint32_t threads = 1;

  void validate() const;
};

enum class SearchStatus { Exact, Unknown };

/// Exact value with certificates, or an honest lower bound when the budget
/// ran out. For Exact outcomes the certificate is a bad coloring at value-1
/// (absent only when value is 1); for Unknown it sits at value-1 as well,
/// the deepest k at which a bad coloring was fully exhibited.
struct SearchOutcome {
  SearchStatus status = SearchStatus::Unknown;
  std::uint64_t value = 1;
  std::optional<Coloring> lower_certificate;
  std::uint64_t nodes_explored = 0;
};

struct ProblemSpec {
  enum class Kind { Sp, U, Hind };
  Kind kind = Kind::Sp;
  std::uint64_t m = 1, p = 1;  // Sp only
  std::uint64_t n = 1;         // U / Hind only

  static ProblemSpec sp(std::uint64_t m, std::uint64_t p) { return {Kind::Sp, m, p, 1}; }
  static ProblemSpec u(std::uint64_t n) { return {Kind::U, 1, 1, n}; }
  static ProblemSpec hind(std::uint64_t n) { return {Kind::Hind, 1, 1, n}; }
};

/// Lower-bound evidence: a coloring admitting no witness for `problem`.
struct BadColoringCertificate {
  ProblemSpec problem;
  Coloring coloring;
};

// Exhaustive witness search over one coloring. Deterministic tie-breaks:
// smallest |H| first, then lexicographically least H (spencer); tuples in
// lexicographic support-bitmask order (union). Returns nullopt iff none.
std::optional<SpencerWitness> find_spencer_witness(const Coloring& coloring,
                                                   std::uint64_t m,
                                                   std::uint64_t p);
std::optional<UnionWitness> find_union_witness(const Coloring& coloring,
                                               std::uint64_t n, bool ordered);

// Budget-capped variant for embedded searches: counts candidate block
// extensions and reports exhaustion through the flag (0 = unlimited).
std::optional<UnionWitness> find_union_witness(const Coloring& coloring,
                                               std::uint64_t n, bool ordered,
                                               std::uint64_t node_budget,
                                               bool& budget_exhausted);

// Least k such that every c-coloring admits a witness, by budgeted,
// symmetry-reduced, pruned DFS over colorings (cells in increasing order;
// cell 1 gets color 0 and a new color may only appear as the smallest unused
// index). Outputs are identical for any thread count.
SearchOutcome compute_sp(std::uint64_t m, std::uint64_t p, std::uint32_t c,
                         const SearchBudget& budget = {});
SearchOutcome compute_u(std::uint64_t n, std::uint32_t c,
                        const SearchBudget& budget = {});
SearchOutcome compute_hind(std::uint64_t n, std::uint32_t c,
                           const SearchBudget& budget = {});

// Independent brute-force oracle: enumerates every coloring outright, no
// pruning, no canonicalization, witness search via the find_* routines.
// Sequential by design; budget.max_nodes counts colorings examined.
SearchOutcome naive_compute(const ProblemSpec& problem, std::uint32_t c,
                            const SearchBudget& budget = {});

// True iff exhaustive witness search over the certified coloring comes back
// empty. InputError when the coloring kind does not match the problem.
bool verify_certificate(const BadColoringCertificate& cert);

}  // namespace hindman
