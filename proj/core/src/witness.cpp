#include "hindman/witness.hpp"

#include <bit>
#include <string>

namespace hindman {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

}  // namespace

CheckReport verify_spencer(const Coloring& coloring, const SpencerWitness& w) {
  if (coloring.kind != Coloring::Domain::Interval) {
    return {false, "coloring is not interval-kind"};
  }
  if (w.m == 0 || w.p == 0) return {false, "m and p must be positive"};
  if (w.H.empty()) return {false, "H is empty"};
  for (std::size_t i = 0; i < w.H.size(); ++i) {
    if (w.H[i] == 0) return {false, "H contains 0"};
    if (i > 0 && w.H[i] <= w.H[i - 1]) return {false, "H is not strictly increasing"};
  }
  const std::uint64_t l = w.H.size();
  if (w.m > w.H.front()) {
    return {false, "m <= a_0 violated: m=" + num(w.m) + ", a_0=" + num(w.H.front())};
  }
  if (w.p > l) return {false, "p <= l violated: p=" + num(w.p) + ", l=" + num(l)};
  if (w.H[w.p - 1] > l) {
    return {false, "a_{p-1} <= l violated: a_{p-1}=" + num(w.H[w.p - 1]) + ", l=" + num(l)};
  }
  std::uint64_t total = 0;
  for (std::uint64_t a : w.H) {
    total += a;
    if (total < a) return {false, "sum overflows 64 bits"};
  }
  // All subset sums lie in [a_0, total], so the range check reduces to the
  // full sum.
  if (total > coloring.k) {
    return {false, "sum " + num(total) + " outside [" + num(coloring.k) + "]"};
  }
  const auto sums = sum_set(w.H);
  const std::uint32_t ref = coloring.color_at(sums.front());
  for (std::uint64_t s : sums) {
    if (coloring.color_at(s) != ref) {
      return {false, "sum-set not monochromatic: cells " + num(sums.front()) +
                         " and " + num(s) + " differ"};
    }
  }
  return {true, {}};
}

CheckReport verify_union(const Coloring& coloring, const UnionWitness& w) {
  if (coloring.kind != Coloring::Domain::Subsets) {
    return {false, "coloring is not subsets-kind"};
  }
  if (w.n == 0) return {false, "n must be positive"};
  if (w.d.size() != w.n) return {false, "witness has " + num(w.d.size()) + " blocks, expected " + num(w.n)};
  if (w.n > 20) return {false, "n too large to check"};
  for (const auto& di : w.d) {
    if (di.empty()) return {false, "empty support"};
    if (di.max_element() >= coloring.k) {
      return {false, "support index " + num(di.max_element()) + " outside ground set"};
    }
  }
  for (std::size_t i = 0; i < w.d.size(); ++i) {
    for (std::size_t j = i + 1; j < w.d.size(); ++j) {
      if (!w.d[i].disjoint_from(w.d[j])) return {false, "supports overlap"};
    }
  }
  if (w.ordered) {
    for (std::size_t i = 0; i + 1 < w.d.size(); ++i) {
      if (!precedes(w.d[i], w.d[i + 1])) return {false, "supports not <-ordered"};
    }
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(w.d.size());
  for (const auto& di : w.d) masks.push_back(di.mask());
  const std::uint32_t ref = coloring.color_at(masks.front());
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << w.n); ++f) {
    std::uint64_t u = 0;
    for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
      u |= masks[std::countr_zero(rest)];
    }
    if (coloring.color_at(u) != ref) {
      return {false, "union cell " + num(u) + " breaks monochromaticity"};
    }
  }
  return {true, {}};
}

}  // namespace hindman
