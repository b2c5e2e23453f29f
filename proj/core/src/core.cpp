#include "hindman/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hindman {

namespace {

constexpr std::uint32_t kMaxSubsetsGround = 22;   // 2^22-1 cells ~ 4M
constexpr std::uint32_t kMaxIntervalLen = 1u << 26;

}  // namespace

FiniteSet::FiniteSet(std::initializer_list<unsigned> elems)
    : FiniteSet(std::vector<unsigned>(elems)) {}

FiniteSet::FiniteSet(std::vector<unsigned> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FiniteSet FiniteSet::from_mask(std::uint64_t mask) {
  FiniteSet s;
  while (mask != 0) {
    unsigned b = static_cast<unsigned>(std::countr_zero(mask));
    s.elems_.push_back(b);
    mask &= mask - 1;
  }
  return s;
}

FiniteSet FiniteSet::interval(unsigned lo, unsigned hi) {
  if (lo > hi) throw DomainError("interval: lo > hi");
  FiniteSet s;
  s.elems_.reserve(hi - lo + 1);
  for (unsigned e = lo; e <= hi; ++e) s.elems_.push_back(e);
  return s;
}

unsigned FiniteSet::min_element() const {
  if (elems_.empty()) throw DomainError("min of empty set");
  return elems_.front();
}

unsigned FiniteSet::max_element() const {
  if (elems_.empty()) throw DomainError("max of empty set");
  return elems_.back();
}

bool FiniteSet::contains(unsigned e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::uint64_t FiniteSet::mask() const {
  std::uint64_t m = 0;
  for (unsigned e : elems_) {
    if (e >= 64) throw DomainError("element " + std::to_string(e) + " too large for a 64-bit mask");
    m |= std::uint64_t{1} << e;
  }
  return m;
}

FiniteSet FiniteSet::united(const FiniteSet& other) const {
  std::vector<unsigned> merged;
  merged.reserve(elems_.size() + other.elems_.size());
  std::merge(elems_.begin(), elems_.end(), other.elems_.begin(),
             other.elems_.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  FiniteSet s;
  s.elems_ = std::move(merged);
  return s;
}

bool FiniteSet::disjoint_from(const FiniteSet& other) const {
  auto i = elems_.begin();
  auto j = other.elems_.begin();
  while (i != elems_.end() && j != other.elems_.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

BlockFamily::BlockFamily(std::vector<FiniteSet> blocks_in, bool ordered_in)
    : blocks(std::move(blocks_in)), ordered(ordered_in) {
  for (const auto& b : blocks) {
    if (b.empty()) throw InputError("block family: empty block");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (!blocks[i].disjoint_from(blocks[j])) {
        throw InputError("block family: blocks overlap");
      }
    }
  }
  if (ordered) {
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      if (!precedes(blocks[i], blocks[i + 1])) {
        throw InputError("block family: not <-ordered");
      }
    }
  }
}

Coloring Coloring::interval(std::uint32_t k, std::uint32_t colors,
                            std::vector<std::uint32_t> assign) {
  if (k == 0 || k > kMaxIntervalLen) throw InputError("coloring: bad interval length");
  if (colors == 0) throw InputError("coloring: colors must be positive");
  if (assign.size() != k) throw InputError("coloring: assign length != k");
  for (auto c : assign) {
    if (c >= colors) throw InputError("coloring: color index out of range");
  }
  Coloring col;
  col.kind = Domain::Interval;
  col.k = k;
  col.colors = colors;
  col.assign = std::move(assign);
  return col;
}

Coloring Coloring::subsets(std::uint32_t k, std::uint32_t colors,
                           std::vector<std::uint32_t> assign) {
  if (k == 0 || k > kMaxSubsetsGround) throw InputError("coloring: bad ground-set size");
  if (colors == 0) throw InputError("coloring: colors must be positive");
  const std::uint64_t cells = (std::uint64_t{1} << k) - 1;
  if (assign.size() != cells) throw InputError("coloring: assign length != 2^k-1");
  for (auto c : assign) {
    if (c >= colors) throw InputError("coloring: color index out of range");
  }
  Coloring col;
  col.kind = Domain::Subsets;
  col.k = k;
  col.colors = colors;
  col.assign = std::move(assign);
  return col;
}

std::uint64_t Coloring::cell_count() const {
  return kind == Domain::Interval ? k : (std::uint64_t{1} << k) - 1;
}

std::uint32_t Coloring::color_at(std::uint64_t cell) const {
  if (cell == 0 || cell > cell_count()) {
    throw DomainError("cell " + std::to_string(cell) + " outside the coloring domain");
  }
  return assign[cell - 1];
}

std::uint64_t exp2(const FiniteSet& a) {
  if (a.empty()) throw DomainError("exp2 of empty set");
  std::uint64_t v = 0;
  for (unsigned e : a) {
    if (e >= 64) throw DomainError("exp2: element out of 64-bit range");
    v += std::uint64_t{1} << e;
  }
  return v;
}

FiniteSet set_of(std::uint64_t n) {
  if (n == 0) throw DomainError("set_of(0)");
  return FiniteSet::from_mask(n);
}

bool precedes(const FiniteSet& a, const FiniteSet& b) {
  if (a.empty() || b.empty()) throw DomainError("precedes of empty set");
  return a.max_element() < b.min_element();
}

std::vector<FiniteSet> nu(const BlockFamily& family) {
  const std::size_t n = family.blocks.size();
  if (n == 0) return {};
  if (n > 20) throw DomainError("nu: too many blocks");
  std::vector<FiniteSet> unions;
  unions.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << n); ++f) {
    FiniteSet u;
    for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
      u = u.united(family.blocks[std::countr_zero(rest)]);
    }
    unions.push_back(std::move(u));
  }
  return unions;
}

std::vector<std::uint64_t> sum_set(const std::vector<std::uint64_t>& h) {
  if (h.empty()) throw DomainError("sum_set of empty set");
  if (h.size() > 20) throw DomainError("sum_set: too many elements");
  std::vector<std::uint64_t> sorted = h;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] == 0) throw DomainError("sum_set: elements must be positive");
    if (i > 0 && sorted[i] == sorted[i - 1]) throw DomainError("sum_set: elements must be distinct");
  }
  // Grow the sum list one element at a time; sums stay below 2^64 by guard.
  std::vector<std::uint64_t> sums;
  sums.reserve((std::size_t{1} << sorted.size()) - 1);
  for (std::uint64_t x : sorted) {
    const std::size_t old = sums.size();
    for (std::size_t i = 0; i < old; ++i) {
      std::uint64_t s = sums[i] + x;
      if (s < x) throw DomainError("sum_set: sum overflows 64 bits");
      sums.push_back(s);
    }
    sums.push_back(x);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

std::uint32_t color_of(const Coloring& coloring, std::uint64_t cell) {
  return coloring.color_at(cell);
}

std::uint32_t color_of(const Coloring& coloring, const FiniteSet& cell) {
  if (coloring.kind != Coloring::Domain::Subsets) {
    throw DomainError("set-valued cells require a subsets coloring");
  }
  if (cell.empty()) throw DomainError("empty cell");
  return coloring.color_at(cell.mask());
}

}  // namespace hindman
