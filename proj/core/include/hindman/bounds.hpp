#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hindman/errors.hpp"
#include "hindman/search.hpp"

namespace hindman {

using BigNat = boost::multiprecision::cpp_int;

constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 20;

/// Exact-or-symbolic natural. Values stay exact while every intermediate
/// power fits the bit budget; beyond that they remain expression trees over
/// constants, sums, constant-base powers and U/Hind oracle leaves, which keeps
/// the bound computation total on tower-sized inputs.
class ExtNat {
 public:
  enum class Kind { Exact, Sum, Pow, Oracle };
  enum class OracleKind { U, Hind };

  ExtNat();  // Exact 0

  static ExtNat exact(BigNat v);
  static ExtNat sum(ExtNat a, ExtNat b);
  static ExtNat pow(BigNat base, ExtNat exp);  // base >= 1
  static ExtNat pow2(ExtNat exp) { return pow(BigNat(2), std::move(exp)); }
  static ExtNat oracle(OracleKind kind, ExtNat n, ExtNat c);

  Kind kind() const;
  bool is_exact() const;
  const BigNat& value() const;     // Exact only
  const BigNat& base() const;      // Pow only
  OracleKind oracle_kind() const;  // Oracle only
  ExtNat child(int i) const;       // Sum: 0/1; Pow: 0 = exponent; Oracle: 0 = n, 1 = c

  bool operator==(const ExtNat& other) const;  // structural
  bool operator!=(const ExtNat& other) const { return !(*this == other); }

  // Fixed prefix notation: exact values in decimal, "(+ a b)",
  // "(pow base e)", "(u n c)", "(hind n c)".
  std::string str() const;

 private:
  struct Node;
  explicit ExtNat(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class OracleFallback { Symbolic, ExactSearch };

/// Known U/Hind values plus the policy for misses. With ExactSearch fallback
/// unresolved leaves are settled by the search module (results are memoized
/// into the table); with Symbolic fallback they stay as expression leaves.
/// The pigeonhole identities U(n,1)=Hind(n,1)=n and U(1,c)=Hind(1,c)=1 are
/// applied in ExactSearch mode, where they shortcut provable search outcomes.
struct OracleTable {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> u_entries;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> hind_entries;
  OracleFallback fallback = OracleFallback::Symbolic;
  SearchBudget search_budget{};
};

/// Full transcript of the bound recursion: k* = Hind(p+1,c), n_0 the least
/// n with m <= 2^n, m_i = 2^{n_0+...+n_i}, alpha_i = 2^{k*-i-1+n_1+...+n_i},
/// n_{i+1} = U(m_i, c^{alpha_i}). Two bounds are reported: bound_paper =
/// 2^{n_{k*}} and bound_operative = m_{k*}, the interval the replay actually
/// colors; neither is asserted against the other.
struct BoundTrace {
  std::uint64_t m = 1, p = 1, c = 1;
  ExtNat k_star;
  std::vector<ExtNat> n_seq;      // n_0..n_{k*}
  std::vector<ExtNat> m_seq;      // m_0..m_{k*}
  std::vector<ExtNat> alpha_seq;  // alpha_0..alpha_{k*-1}
  ExtNat bound_paper;
  ExtNat bound_operative;
};

/// Thrown when an oracle miss cannot be settled within the search budget;
/// carries whatever part of the trace was already computed.
struct OracleBudgetError : BudgetError {
  OracleBudgetError(const std::string& what, BoundTrace partial_in)
      : BudgetError(what), partial(std::move(partial_in)) {}
  BoundTrace partial;
};

// min{ n : m <= 2^n }; DomainError for m = 0.
std::uint64_t least_n0(std::uint64_t m);

// Resolves to Exact where the table/fallback allow and every materialized
// power stays under bit_budget bits; otherwise returns a partially
// simplified expression. Idempotent; non-resolution is a value, not an error.
ExtNat eval(const ExtNat& x, OracleTable& oracles,
            std::uint64_t bit_budget = kDefaultBitBudget);

// Runs the recursion above. k* itself must materialize (table, identity or
// search, regardless of fallback); U-leaves inside the recursion follow the
// table's fallback policy. Throws OracleBudgetError when an exact-search
// resolution runs out of budget.
BoundTrace spencer_bound(std::uint64_t m, std::uint64_t p, std::uint32_t c,
                         OracleTable& oracles,
                         std::uint64_t bit_budget = kDefaultBitBudget);

// Deterministic human-readable and machine-parsable trace rendering.
std::string render(const BoundTrace& trace);

}  // namespace hindman
