#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hindman/errors.hpp"

namespace hindman {

/// Finite subset of the naturals (0 included), stored as a strictly
/// increasing element list. Immutable value type; all operations are pure.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<unsigned> elems);
  explicit FiniteSet(std::vector<unsigned> elems);  // normalizes (sort+dedup)

  // The set {b : bit b of mask is set}. Inverse of mask().
  static FiniteSet from_mask(std::uint64_t mask);
  // The integer interval [lo, hi], inclusive. Requires lo <= hi.
  static FiniteSet interval(unsigned lo, unsigned hi);

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<unsigned>& elements() const { return elems_; }

  unsigned min_element() const;  // DomainError on empty
  unsigned max_element() const;  // DomainError on empty
  bool contains(unsigned e) const;

  // Bitmask with bit e set per element e. Requires max element < 64.
  std::uint64_t mask() const;

  FiniteSet united(const FiniteSet& other) const;
  bool disjoint_from(const FiniteSet& other) const;
  bool is_subset_of(const FiniteSet& other) const;

  auto operator<=>(const FiniteSet&) const = default;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

 private:
  std::vector<unsigned> elems_;
};

/// A family of pairwise disjoint non-empty blocks; when `ordered`, each
/// block's maximum lies below the next block's minimum. Validated on
/// construction (InputError).
struct BlockFamily {
  BlockFamily(std::vector<FiniteSet> blocks_in, bool ordered_in);

  std::vector<FiniteSet> blocks;
  bool ordered = false;
};

/// Total color assignment on either the integer interval [k] or the
/// non-empty subsets of {0,...,k-1}. Interval cells are 1..k; subset cells
/// are addressed by bitmask 1..2^k-1 (bit b <-> element/block b).
struct Coloring {
  enum class Domain { Interval, Subsets };

  static Coloring interval(std::uint32_t k, std::uint32_t colors,
                           std::vector<std::uint32_t> assign);
  static Coloring subsets(std::uint32_t k, std::uint32_t colors,
                          std::vector<std::uint32_t> assign);

  std::uint64_t cell_count() const;
  // Color of a 1-based cell index; DomainError when out of range.
  std::uint32_t color_at(std::uint64_t cell) const;

  bool operator==(const Coloring&) const = default;

  Domain kind = Domain::Interval;
  std::uint32_t k = 1;
  std::uint32_t colors = 1;
  std::vector<std::uint32_t> assign;
};

// exp2(A) = sum of 2^a over a in A. Requires A non-empty with elements < 64.
std::uint64_t exp2(const FiniteSet& a);

// Inverse of exp2 via binary digits; n must be positive.
FiniteSet set_of(std::uint64_t n);

// max A < min B; both sets must be non-empty.
bool precedes(const FiniteSet& a, const FiniteSet& b);

// All 2^|blocks|-1 non-empty unions, ordered by increasing index-submask.
std::vector<FiniteSet> nu(const BlockFamily& family);

// All subset sums of a non-empty set of distinct positive naturals, sorted.
std::vector<std::uint64_t> sum_set(const std::vector<std::uint64_t>& h);

// Lookup helpers; DomainError when the cell is outside the declared domain.
std::uint32_t color_of(const Coloring& coloring, std::uint64_t cell);
std::uint32_t color_of(const Coloring& coloring, const FiniteSet& cell);

}  // namespace hindman
