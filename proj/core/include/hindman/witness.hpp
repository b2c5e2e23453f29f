#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hindman/core.hpp"

namespace hindman {

/// Certificate for a Spencer-number instance: H = {a_0 < ... < a_{l-1}} with
/// every subset sum monochromatic, m <= a_0, p <= l and a_{p-1} <= l.
struct SpencerWitness {
  std::uint64_t m = 1;
  std::uint64_t p = 1;
  std::vector<std::uint64_t> H;  // strictly increasing

  bool operator==(const SpencerWitness&) const = default;
};

/// Certificate for a disjoint-unions / finitary-Hindman instance: n blocks of
/// ground indices whose non-empty unions are monochromatic. `ordered` asks in
/// addition that the supports be <-ordered.
struct UnionWitness {
  std::uint64_t n = 1;
  bool ordered = false;
  std::vector<FiniteSet> d;  // supports, indices into {0,...,k-1}

  bool operator==(const UnionWitness&) const = default;
};

struct CheckReport {
  bool ok = false;
  std::string violation;  // names the first violated condition when !ok
};

// Checks a Spencer witness against an interval coloring. Violations are
// reported, never thrown; the first failing condition is named in the order:
// m <= a_0, p <= l, a_{p-1} <= l, sum range, monochromaticity.
CheckReport verify_spencer(const Coloring& coloring, const SpencerWitness& w);

// Checks a union witness against a subsets coloring (supports in range,
// disjoint, <-ordered when flagged, all 2^n-1 unions one color).
CheckReport verify_union(const Coloring& coloring, const UnionWitness& w);

}  // namespace hindman
