#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hindman/bounds.hpp"
#include "hindman/core.hpp"
#include "hindman/search.hpp"
#include "hindman/witness.hpp"

namespace hindman {

// Executes the bound recursion's constructive argument as an algorithm:
// carve [n_0, n_0+...+n_{k*}-1] into intervals S_i, lift the integer coloring
// to subsets through exp2, pick fingerprint-monochromatic rows per interval
// by reverse induction, run one ordered-unions step over the first rows, and
// assemble a Spencer witness from the result.

struct IntervalLayout {
  std::vector<std::uint64_t> n_seq;  // n_0..n_{k*}
  std::uint64_t k_star = 1;
  std::vector<FiniteSet> intervals;  // S_0..S_{k*-1}, S_i of size n_{i+1}
  FiniteSet s_star;                  // union of the S_i
};

// Validates the supplied sequence (n_0 may be 0, later entries positive) and
// materializes the intervals. k* is implied by the sequence length.
IntervalLayout build_layout(std::uint64_t m, std::uint64_t p, std::uint64_t c,
                            const std::vector<std::uint64_t>& n_seq);

/// The induced coloring c*(A) = c(exp2(A)) on non-empty subsets of S*.
/// Requires the interval to cover exp2(S*); rejecting shorter intervals is
/// exactly what bound_operative guarantees.
class ColorStar {
 public:
  ColorStar(const Coloring& coloring, const IntervalLayout& layout);

  std::uint32_t operator()(const FiniteSet& a) const;
  // Same lookup with A encoded as its element bitmask (== exp2(A)).
  std::uint32_t at_mask(std::uint64_t mask) const { return coloring_->color_at(mask); }
  std::uint32_t colors() const { return coloring_->colors; }

 private:
  const Coloring* coloring_;
};

ColorStar induced_colorstar(const Coloring& coloring, const IntervalLayout& layout);

/// rows[i][s] = w_{i,s}: pairwise disjoint subsets of S_i, selected so that
/// the non-empty unions of each level's rows share one fingerprint class.
struct RowSelection {
  std::vector<std::vector<FiniteSet>> rows;
};

// The level-i fingerprint of u: the vector of c*-colors of A u u u (rows of
// higher levels selected by B), A over subsets of S_0 u...u S_{i-1} (bitmask
// major) and B over subsets of {i+1,...,k*-1} (bitmask minor). Two subsets of
// S_i are equivalent for the level's recoloring iff their vectors are equal.
std::vector<std::uint32_t> fingerprint(const FiniteSet& u, std::uint64_t level,
                                       const IntervalLayout& layout,
                                       const RowSelection& rows_above,
                                       const ColorStar& colorstar);

// Picks `count` disjoint subsets of S_level whose non-empty unions share one
// fingerprint class, via find_union_witness over the class recoloring.
// InfeasibleError when the interval cannot host them; BudgetError when the
// node budget runs out first.
std::vector<FiniteSet> select_rows(const IntervalLayout& layout,
                                   const ColorStar& colorstar,
                                   std::uint64_t level, std::uint64_t count,
                                   const RowSelection& rows_above,
                                   std::uint64_t node_budget);

struct HindmanSelection {
  std::vector<FiniteSet> supports;  // levels used by each v_t
  std::vector<FiniteSet> v;         // v_0 < ... < v_p
};

// Ordered-unions step over the first rows w_{0,0} < ... < w_{k*-1,0} under
// c*; InfeasibleError when no ordered (p+1)-witness exists (the caller
// supplied fewer levels than Hind(p+1,c)).
HindmanSelection hindman_select(const ColorStar& colorstar,
                                const std::vector<FiniteSet>& first_rows,
                                std::uint64_t p);

struct BlockDecomposition {
  std::vector<std::uint64_t> levels;  // e_1 < ... < e_r with v_p = U w_{e_j,0}
  std::uint64_t l_star = 1;           // m_{e_1}
};

struct AssembledWitness {
  SpencerWitness witness;
  BlockDecomposition decomposition;
  std::vector<FiniteSet> v_all;  // v_0..v_{p+l*-1}
};

// Builds v_{p+s} = U_j w_{e_j,s}, checks the a_0 and a_{p-1} estimates and
// the head ordering, and returns H = {exp2(v_i)} sorted. Violations raise
// ConstructionBugError (unreachable when the selection succeeded).
AssembledWitness assemble_witness(const HindmanSelection& selection,
                                  const RowSelection& rows,
                                  const IntervalLayout& layout,
                                  std::uint64_t m, std::uint64_t p);

// For every level, all non-empty unions of that level's rows carry the same
// fingerprint vector; this is the property the final chain of equalities
// consumes.
bool audit_row_equivalence(const RowSelection& rows, const ColorStar& colorstar,
                           const IntervalLayout& layout);

struct ReplayLevelRecord {
  std::uint64_t level = 0;
  std::uint64_t row_count = 0;       // m_i
  std::uint64_t alpha_exponent = 0;  // log2(alpha_i)
  std::uint64_t class_count = 0;     // distinct fingerprint vectors on P+(S_i)
  std::vector<FiniteSet> rows;
};

struct ReplayTranscript {
  std::uint64_t m = 1, p = 1, c = 1;
  std::vector<std::uint64_t> n_seq;
  std::uint64_t k_star = 1;
  std::vector<FiniteSet> intervals;
  std::vector<ReplayLevelRecord> levels;  // ascending by level
  std::vector<FiniteSet> v_head;          // v_0..v_p
  std::vector<FiniteSet> v_tail;          // v_{p+1}..v_{p+l*-1}
  BlockDecomposition decomposition;
  SpencerWitness witness;
  bool audit_ok = false;
  bool verified = false;
};

struct ExtractResult {
  SpencerWitness witness;
  ReplayTranscript transcript;
};

// End-to-end pipeline; never returns an unverified witness. n_seq_override
// replaces the bound recursion's sequence for desk-scale experimentation and
// may make the construction infeasible (reported, not crashed).
ExtractResult extract(std::uint64_t m, std::uint64_t p, std::uint32_t c,
                      const Coloring& coloring, OracleTable& oracles,
                      const SearchBudget& budget,
                      const std::optional<std::vector<std::uint64_t>>&
                          n_seq_override = std::nullopt);

}  // namespace hindman
