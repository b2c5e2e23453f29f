#include "hindman/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <functional>
#include <thread>
#include <vector>

namespace hindman {

namespace {

constexpr std::uint32_t kIntervalCap = 63;  // subset sums tracked in a 64-bit mask
constexpr std::uint32_t kGroundCap = 20;    // subsets domains up to 2^20-1 cells
constexpr std::size_t kTaskTarget = 64;     // parallel split width

// ---------------------------------------------------------------------------
// Spencer witness patterns.
//
// Any witness H with sum-set inside [k] has total sum t <= k, and a coloring
// prefix 1..t first contains its sum-set exactly when cell t is colored. The
// DFS therefore only needs, per total t, the list of candidate sum-sets.

struct SumPattern {
  std::vector<std::uint8_t> sums;  // ascending, last element == total
};

// Largest witness size possible in [k] for minimum element m.
std::uint64_t max_witness_size(std::uint64_t k, std::uint64_t m) {
  std::uint64_t l = 0;
  std::uint64_t total = 0;
  while (total + (m + l) <= k) {
    total += m + l;
    ++l;
  }
  return l;
}

std::vector<std::vector<SumPattern>> spencer_patterns(std::uint32_t k,
                                                      std::uint64_t m,
                                                      std::uint64_t p) {
  std::vector<std::vector<SumPattern>> by_total(k + 1);
  const std::uint64_t l_max = max_witness_size(k, m);
  if (l_max == 0) return by_total;

  std::vector<std::uint64_t> h;
  std::function<void(std::uint64_t, std::uint64_t)> rec =
      [&](std::uint64_t start, std::uint64_t total) {
        for (std::uint64_t a = start; total + a <= k; ++a) {
          const std::uint64_t pos = h.size();
          // Ascending elements force H[p-1] >= a + (p-1-pos); it must stay
          // within l_max or the size condition can never be met.
          if (pos < p && a + (p - 1 - pos) > l_max) break;
          h.push_back(a);
          const std::uint64_t l = h.size();
          if (l >= p && h[p - 1] <= l) {
            std::uint64_t dp = 1;
            for (std::uint64_t x : h) dp |= dp << x;
            SumPattern pat;
            for (std::uint32_t s = 1; s <= k; ++s) {
              if (dp >> s & 1) pat.sums.push_back(static_cast<std::uint8_t>(s));
            }
            by_total[total + a].push_back(std::move(pat));
          }
          rec(a + 1, total + a);
          h.pop_back();
        }
      };
  rec(m, 0);
  return by_total;
}

// ---------------------------------------------------------------------------
// Union witness detection inside a colored prefix.
//
// Cells are subset bitmasks colored in increasing order, so every union of a
// candidate family is a submask of the family's full union t; the check at
// cell t covers exactly the witnesses whose full union is t.

struct PartitionScratch {
  std::vector<std::uint64_t> unions;
};

thread_local PartitionScratch tls_partition_scratch;

bool ordered_partition_rec(const std::uint32_t* col, std::uint32_t ref,
                           const unsigned* bits, int nbits, int idx,
                           std::uint64_t parts_left, std::size_t nunions,
                           std::vector<std::uint64_t>& unions) {
  if (parts_left == 0) return idx == nbits;
  const int max_len = nbits - idx - static_cast<int>(parts_left) + 1;
  std::uint64_t part = 0;
  for (int len = 1; len <= max_len; ++len) {
    part |= std::uint64_t{1} << bits[idx + len - 1];
    if (col[part] != ref) continue;
    bool ok = true;
    std::size_t count = nunions;
    if (unions.size() < 2 * nunions + 2) unions.resize(2 * nunions + 2);
    for (std::size_t j = 0; j < nunions; ++j) {
      const std::uint64_t u = unions[j] | part;
      if (col[u] != ref) {
        ok = false;
        break;
      }
      unions[count++] = u;
    }
    if (!ok) continue;
    unions[count++] = part;
    if (ordered_partition_rec(col, ref, bits, nbits, idx + len, parts_left - 1,
                              count, unions)) {
      return true;
    }
  }
  return false;
}

bool unordered_partition_rec(const std::uint32_t* col, std::uint32_t ref,
                             std::uint64_t remaining, std::uint64_t parts_left,
                             std::size_t nunions,
                             std::vector<std::uint64_t>& unions) {
  if (parts_left == 0) return remaining == 0;
  if (static_cast<std::uint64_t>(std::popcount(remaining)) < parts_left) return false;
  const std::uint64_t lb = remaining & (~remaining + 1);
  const std::uint64_t rest = remaining ^ lb;
  // Canonical partitions: each part owns the lowest bit not yet placed.
  for (std::uint64_t s = rest;; s = (s - 1) & rest) {
    const std::uint64_t part = lb | s;
    const std::uint64_t left = remaining ^ part;
    if (static_cast<std::uint64_t>(std::popcount(left)) >= parts_left - 1 &&
        col[part] == ref) {
      bool ok = true;
      std::size_t count = nunions;
      if (unions.size() < 2 * nunions + 2) unions.resize(2 * nunions + 2);
      for (std::size_t j = 0; j < nunions; ++j) {
        const std::uint64_t u = unions[j] | part;
        if (col[u] != ref) {
          ok = false;
          break;
        }
        unions[count++] = u;
      }
      if (ok) {
        unions[count++] = part;
        if (unordered_partition_rec(col, ref, left, parts_left - 1, count,
                                    unions)) {
          return true;
        }
      }
    }
    if (s == 0) break;
  }
  return false;
}

bool has_mono_partition(const std::uint32_t* col, std::uint64_t t,
                        std::uint64_t n, bool ordered) {
  if (n == 1) return true;  // the cell itself is a one-block witness
  if (static_cast<std::uint64_t>(std::popcount(t)) < n) return false;
  const std::uint32_t ref = col[t];
  auto& unions = tls_partition_scratch.unions;
  if (ordered) {
    unsigned bits[64];
    int nb = 0;
    for (std::uint64_t rest = t; rest != 0; rest &= rest - 1) {
      bits[nb++] = static_cast<unsigned>(std::countr_zero(rest));
    }
    return ordered_partition_rec(col, ref, bits, nb, 0, n, 0, unions);
  }
  return unordered_partition_rec(col, ref, t, n, 0, unions);
}

// ---------------------------------------------------------------------------
// Domains for the level search (fixed k): cell count plus the predicate
// "assigning cell t completed a witness inside the colored prefix".

struct IntervalDomain {
  std::uint32_t k;
  const std::vector<std::vector<SumPattern>>* by_total;

  std::uint64_t cells() const { return k; }
  bool closes(const std::uint32_t* col, std::uint64_t t) const {
    const std::uint32_t ref = col[t];
    for (const SumPattern& pat : (*by_total)[t]) {
      bool mono = true;
      for (std::uint8_t s : pat.sums) {
        if (col[s] != ref) {
          mono = false;
          break;
        }
      }
      if (mono) return true;
    }
    return false;
  }
};

struct SubsetsDomain {
  std::uint32_t k;
  std::uint64_t n;
  bool ordered;

  std::uint64_t cells() const { return (std::uint64_t{1} << k) - 1; }
  bool closes(const std::uint32_t* col, std::uint64_t t) const {
    return has_mono_partition(col, t, n, ordered);
  }
};

// ---------------------------------------------------------------------------
// Level search: does a bad (witness-free) coloring of this domain exist?
//
// Two deterministic phases. Phase 1 expands the canonical witness-free
// prefix frontier breadth-first until it is wide enough to split work;
// phase 2 runs one DFS task per prefix and folds the per-task records in
// prefix order, reproducing the single-threaded budget semantics exactly.
// The only cross-task signal is the monotone index of the first task that
// found a bad coloring; tasks behind it may be abandoned without affecting
// the fold.

struct LevelResult {
  enum class Kind { NoBad, BadFound, Exhausted } kind;
  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> coloring;  // BadFound only
};

struct TaskRecord {
  std::uint64_t nodes = 0;
  std::uint64_t found_at = 0;
  bool found = false;
  bool completed = false;
  std::vector<std::uint32_t> coloring;
};

struct PrefixState {
  std::vector<std::uint32_t> col;
  std::uint32_t used = 0;
};

template <class Dom>
void run_task(const Dom& dom, std::uint32_t c, const PrefixState& prefix,
              std::uint64_t cap, std::size_t index,
              std::atomic<std::size_t>& min_found,
              std::vector<std::atomic<std::uint64_t>>& committed,
              TaskRecord& rec) {
  const std::uint64_t cells = dom.cells();
  const std::uint64_t d = prefix.col.size();
  std::vector<std::uint32_t> col(cells + 1, 0);
  std::vector<std::uint32_t> used(cells + 1, 0);
  std::vector<std::uint32_t> next_color(cells + 2, 0);
  for (std::uint64_t i = 0; i < d; ++i) col[i + 1] = prefix.col[i];
  used[d] = prefix.used;

  std::uint64_t count = 0;
  std::uint64_t pos = d + 1;
  next_color[pos] = 0;
  while (true) {
    if ((count & 4095) == 0 && count != 0) {
      if (index > min_found.load(std::memory_order_relaxed)) {
        rec.nodes = count;
        committed[index].store(count + 1, std::memory_order_release);
        return;  // a smaller-index task already holds the result
      }
      // Tighten the cap once every earlier task has committed: the exact
      // sequential remainder is then known.
      std::uint64_t sum = 0;
      bool all_done = true;
      for (std::size_t j = 0; j < index; ++j) {
        const std::uint64_t v = committed[j].load(std::memory_order_acquire);
        if (v == 0) {
          all_done = false;
          break;
        }
        sum += v - 1;
      }
      if (all_done) {
        const std::uint64_t rem = sum >= cap ? 0 : cap - sum;
        if (count >= rem) {
          rec.nodes = count;
          committed[index].store(count + 1, std::memory_order_release);
          return;  // fold will classify this task as budget-exhausted
        }
      }
    }
    const std::uint32_t allowed = std::min<std::uint32_t>(used[pos - 1] + 1, c);
    if (next_color[pos] >= allowed) {
      --pos;
      if (pos == d) {
        rec.completed = true;
        break;
      }
      continue;
    }
    if (count == cap) break;  // rec.completed stays false
    const std::uint32_t color = next_color[pos]++;
    ++count;
    col[pos] = color;
    if (!dom.closes(col.data(), pos)) {
      if (pos == cells) {
        rec.found = true;
        rec.found_at = count;
        rec.completed = true;
        rec.coloring.assign(col.begin() + 1, col.end());
        std::size_t cur = min_found.load(std::memory_order_relaxed);
        while (index < cur &&
               !min_found.compare_exchange_weak(cur, index,
                                                std::memory_order_acq_rel)) {
        }
        break;
      }
      used[pos] = std::max(used[pos - 1], color + 1);
      ++pos;
      next_color[pos] = 0;
    }
  }
  rec.nodes = count;
  committed[index].store(count + 1, std::memory_order_release);
}

template <class Dom>
LevelResult run_level(const Dom& dom, std::uint32_t c, std::uint64_t budget,
                      std::uint32_t threads) {
  const std::uint64_t cells = dom.cells();
  std::uint64_t nodes = 0;
  std::vector<PrefixState> frontier{PrefixState{}};
  std::vector<std::uint32_t> scratch(cells + 1, 0);
  std::uint64_t depth = 0;

  while (true) {
    if (frontier.size() >= kTaskTarget && depth < cells) break;
    // Expansion at leaf depth always returns below, so depth < cells here.
    ++depth;
    std::vector<PrefixState> next;
    for (const PrefixState& pf : frontier) {
      for (std::uint64_t i = 0; i + 1 < depth; ++i) scratch[i + 1] = pf.col[i];
      const std::uint32_t allowed = std::min<std::uint32_t>(pf.used + 1, c);
      for (std::uint32_t color = 0; color < allowed; ++color) {
        if (nodes == budget) return {LevelResult::Kind::Exhausted, budget, {}};
        ++nodes;
        scratch[depth] = color;
        if (!dom.closes(scratch.data(), depth)) {
          if (depth == cells) {
            return {LevelResult::Kind::BadFound, nodes,
                    std::vector<std::uint32_t>(scratch.begin() + 1,
                                               scratch.begin() + 1 + cells)};
          }
          PrefixState st;
          st.col.assign(scratch.begin() + 1, scratch.begin() + 1 + depth);
          st.used = std::max(pf.used, color + 1);
          next.push_back(std::move(st));
        }
      }
    }
    if (next.empty()) return {LevelResult::Kind::NoBad, nodes, {}};
    frontier = std::move(next);
  }

  // Phase 2.
  const std::uint64_t cap = budget - nodes;
  const std::size_t ntasks = frontier.size();
  std::vector<TaskRecord> recs(ntasks);
  std::vector<std::atomic<std::uint64_t>> committed(ntasks);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> min_found{SIZE_MAX};

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= ntasks) break;
      if (i > min_found.load(std::memory_order_relaxed)) {
        committed[i].store(1, std::memory_order_release);
        continue;
      }
      run_task(dom, c, frontier[i], cap, i, min_found, committed, recs[i]);
    }
  };

  const std::uint32_t nthreads =
      std::min<std::uint32_t>(threads, static_cast<std::uint32_t>(ntasks));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::uint32_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Deterministic fold in prefix order.
  std::uint64_t cum = 0;
  for (std::size_t i = 0; i < ntasks; ++i) {
    const std::uint64_t rem = cap - cum;
    if (rem == 0) return {LevelResult::Kind::Exhausted, budget, {}};
    TaskRecord& rec = recs[i];
    if (rec.found && rec.found_at <= rem) {
      return {LevelResult::Kind::BadFound, nodes + cum + rec.found_at,
              std::move(rec.coloring)};
    }
    if (rec.found || !rec.completed || rec.nodes >= rem) {
      return {LevelResult::Kind::Exhausted, budget, {}};
    }
    cum += rec.nodes;
  }
  return {LevelResult::Kind::NoBad, nodes + cum, {}};
}

// ---------------------------------------------------------------------------
// Threshold loop shared by the pruned searches and the naive oracle. The set
// of k admitting a bad coloring is downward closed (restricting a bad
// coloring stays bad), so the answer is the first k whose level search
// proves every coloring good.

using LevelRunner = std::function<LevelResult(std::uint32_t k, std::uint64_t budget_left)>;

SearchOutcome threshold_loop(std::uint32_t effective_max_k,
                             const SearchBudget& budget,
                             const LevelRunner& runner,
                             const std::function<Coloring(std::uint32_t, std::vector<std::uint32_t>)>& make_coloring) {
  SearchOutcome out;
  out.nodes_explored = 0;
  std::uint64_t last_bad_k = 0;
  std::optional<Coloring> last_bad;
  for (std::uint32_t k = 1; k <= effective_max_k; ++k) {
    const std::uint64_t rem = budget.max_nodes - out.nodes_explored;
    if (rem == 0) break;
    LevelResult res = runner(k, rem);
    out.nodes_explored += res.nodes;
    if (res.kind == LevelResult::Kind::NoBad) {
      out.status = SearchStatus::Exact;
      out.value = k;
      out.lower_certificate = std::move(last_bad);
      return out;
    }
    if (res.kind == LevelResult::Kind::BadFound) {
      last_bad_k = k;
      last_bad = make_coloring(k, std::move(res.coloring));
      continue;
    }
    break;  // exhausted
  }
  out.status = SearchStatus::Unknown;
  out.value = last_bad_k + 1;
  out.lower_certificate = std::move(last_bad);
  return out;
}

}  // namespace

void SearchBudget::validate() const {
  if (max_k == 0 || max_nodes == 0 || threads == 0) {
    throw InputError("search budget fields must be positive");
  }
}

std::optional<SpencerWitness> find_spencer_witness(const Coloring& coloring,
                                                   std::uint64_t m,
                                                   std::uint64_t p) {
  if (coloring.kind != Coloring::Domain::Interval) {
    throw InputError("find_spencer_witness needs an interval coloring");
  }
  if (m == 0 || p == 0) throw InputError("m and p must be positive");
  const std::uint64_t k = coloring.k;
  if (k > kIntervalCap) throw InputError("interval too long for witness search");

  const std::uint64_t l_max = max_witness_size(k, m);
  std::vector<std::uint64_t> h;
  // Smallest size first, then lexicographically least H.
  for (std::uint64_t l = std::max<std::uint64_t>(1, p); l <= l_max; ++l) {
    std::function<bool(std::uint64_t, std::uint64_t)> rec =
        [&](std::uint64_t start, std::uint64_t total) -> bool {
      const std::uint64_t pos = h.size();
      if (pos == l) {
        if (h[p - 1] > l) return false;
        std::uint64_t dp = 1;
        for (std::uint64_t x : h) dp |= dp << x;
        const std::uint32_t ref = coloring.color_at(h[0]);
        for (std::uint64_t s = 1; s <= k; ++s) {
          if ((dp >> s & 1) && coloring.color_at(s) != ref) return false;
        }
        return true;
      }
      // Remaining elements are strictly increasing; keep the total feasible.
      const std::uint64_t remaining = l - pos;
      for (std::uint64_t a = start;; ++a) {
        std::uint64_t tail = total;
        bool fits = true;
        for (std::uint64_t i = 0; i < remaining; ++i) {
          tail += a + i;
          if (tail > k) {
            fits = false;
            break;
          }
        }
        if (!fits) return false;
        if (pos < p && a + (p - 1 - pos) > l) return false;
        h.push_back(a);
        if (rec(a + 1, total + a)) return true;
        h.pop_back();
      }
    };
    if (rec(m, 0)) {
      return SpencerWitness{m, p, h};
    }
    h.clear();
  }
  return std::nullopt;
}

std::optional<UnionWitness> find_union_witness(const Coloring& coloring,
                                               std::uint64_t n, bool ordered) {
  bool exhausted = false;
  return find_union_witness(coloring, n, ordered, 0, exhausted);
}

std::optional<UnionWitness> find_union_witness(const Coloring& coloring,
                                               std::uint64_t n, bool ordered,
                                               std::uint64_t node_budget,
                                               bool& budget_exhausted) {
  budget_exhausted = false;
  if (coloring.kind != Coloring::Domain::Subsets) {
    throw InputError("find_union_witness needs a subsets coloring");
  }
  if (n == 0) throw InputError("n must be positive");
  const std::uint32_t k = coloring.k;
  if (n > k) return std::nullopt;  // not enough ground elements
  const std::uint64_t cells = (std::uint64_t{1} << k) - 1;

  std::vector<std::uint64_t> parts;
  std::vector<std::uint64_t> unions;
  std::uint64_t used = 0;
  std::uint32_t ref = 0;
  std::uint64_t visited = 0;

  std::function<bool()> rec = [&]() -> bool {
    if (parts.size() == n) return true;
    std::uint64_t first = 1;
    if (!parts.empty()) {
      if (ordered) {
        const unsigned hb = 63 - static_cast<unsigned>(std::countl_zero(parts.back()));
        if (hb + 1 >= k) return false;
        first = std::uint64_t{1} << (hb + 1);
      } else {
        first = parts.back() + 1;
      }
    }
    for (std::uint64_t d = first; d <= cells; ++d) {
      if (node_budget != 0 && ++visited > node_budget) {
        budget_exhausted = true;
        return false;
      }
      if ((d & used) != 0) continue;
      if (ordered && !parts.empty()) {
        const unsigned hb = 63 - static_cast<unsigned>(std::countl_zero(parts.back()));
        if (static_cast<unsigned>(std::countr_zero(d)) <= hb) continue;
      }
      const std::uint32_t col = coloring.assign[d - 1];
      if (parts.empty()) {
        ref = col;
      } else if (col != ref) {
        continue;
      }
      bool ok = true;
      const std::size_t base = unions.size();
      for (std::size_t j = 0; j < base; ++j) {
        const std::uint64_t u = unions[j] | d;
        if (coloring.assign[u - 1] != ref) {
          ok = false;
          break;
        }
        unions.push_back(u);
      }
      if (ok) {
        unions.push_back(d);
        parts.push_back(d);
        used |= d;
        if (rec()) return true;
        if (budget_exhausted) return false;
        used ^= d;
        parts.pop_back();
      }
      unions.resize(base);
    }
    return false;
  };

  if (!rec() || budget_exhausted) return std::nullopt;
  UnionWitness w;
  w.n = n;
  w.ordered = ordered;
  for (std::uint64_t mask : parts) w.d.push_back(FiniteSet::from_mask(mask));
  return w;
}

SearchOutcome compute_sp(std::uint64_t m, std::uint64_t p, std::uint32_t c,
                         const SearchBudget& budget) {
  budget.validate();
  if (m == 0 || p == 0 || c == 0) throw InputError("parameters must be positive");
  const std::uint32_t effective = std::min(budget.max_k, kIntervalCap);
  std::vector<std::vector<SumPattern>> patterns;
  auto runner = [&](std::uint32_t k, std::uint64_t rem) {
    patterns = spencer_patterns(k, m, p);
    IntervalDomain dom{k, &patterns};
    return run_level(dom, c, rem, budget.threads);
  };
  auto make = [&](std::uint32_t k, std::vector<std::uint32_t> assign) {
    return Coloring::interval(k, c, std::move(assign));
  };
  return threshold_loop(effective, budget, runner, make);
}

namespace {

SearchOutcome compute_union_number(std::uint64_t n, std::uint32_t c, bool ordered,
                                   const SearchBudget& budget) {
  budget.validate();
  if (n == 0 || c == 0) throw InputError("parameters must be positive");
  if (n > 16) throw InputError("n too large for desk-scale search");
  const std::uint32_t effective = std::min(budget.max_k, kGroundCap);
  auto runner = [&](std::uint32_t k, std::uint64_t rem) {
    SubsetsDomain dom{k, n, ordered};
    return run_level(dom, c, rem, budget.threads);
  };
  auto make = [&](std::uint32_t k, std::vector<std::uint32_t> assign) {
    return Coloring::subsets(k, c, std::move(assign));
  };
  return threshold_loop(effective, budget, runner, make);
}

}  // namespace

SearchOutcome compute_u(std::uint64_t n, std::uint32_t c, const SearchBudget& budget) {
  return compute_union_number(n, c, false, budget);
}

SearchOutcome compute_hind(std::uint64_t n, std::uint32_t c, const SearchBudget& budget) {
  return compute_union_number(n, c, true, budget);
}

SearchOutcome naive_compute(const ProblemSpec& problem, std::uint32_t c,
                            const SearchBudget& budget) {
  budget.validate();
  if (c == 0) throw InputError("colors must be positive");
  const bool interval = problem.kind == ProblemSpec::Kind::Sp;
  if (interval && (problem.m == 0 || problem.p == 0)) {
    throw InputError("parameters must be positive");
  }
  if (!interval && problem.n == 0) throw InputError("parameters must be positive");
  const std::uint32_t effective =
      std::min(budget.max_k, interval ? kIntervalCap : kGroundCap);

  auto runner = [&](std::uint32_t k, std::uint64_t rem) -> LevelResult {
    const std::uint64_t cells = interval ? k : (std::uint64_t{1} << k) - 1;
    Coloring coloring =
        interval ? Coloring::interval(k, c, std::vector<std::uint32_t>(cells, 0))
                 : Coloring::subsets(k, c, std::vector<std::uint32_t>(cells, 0));
    std::uint64_t count = 0;
    // Odometer over all c^cells colorings, cell 1 varying fastest.
    while (true) {
      if (count == rem) return {LevelResult::Kind::Exhausted, count, {}};
      ++count;
      bool has_witness = false;
      switch (problem.kind) {
        case ProblemSpec::Kind::Sp:
          has_witness = find_spencer_witness(coloring, problem.m, problem.p).has_value();
          break;
        case ProblemSpec::Kind::U:
          has_witness = find_union_witness(coloring, problem.n, false).has_value();
          break;
        case ProblemSpec::Kind::Hind:
          has_witness = find_union_witness(coloring, problem.n, true).has_value();
          break;
      }
      if (!has_witness) {
        return {LevelResult::Kind::BadFound, count, coloring.assign};
      }
      std::uint64_t i = 0;
      while (i < cells && ++coloring.assign[i] == c) coloring.assign[i++] = 0;
      if (i == cells) return {LevelResult::Kind::NoBad, count, {}};
    }
  };
  auto make = [&](std::uint32_t k, std::vector<std::uint32_t> assign) {
    return interval ? Coloring::interval(k, c, std::move(assign))
                    : Coloring::subsets(k, c, std::move(assign));
  };
  return threshold_loop(effective, budget, runner, make);
}

bool verify_certificate(const BadColoringCertificate& cert) {
  switch (cert.problem.kind) {
    case ProblemSpec::Kind::Sp:
      if (cert.coloring.kind != Coloring::Domain::Interval) {
        throw InputError("sp certificate needs an interval coloring");
      }
      if (cert.problem.m == 0 || cert.problem.p == 0) {
        throw InputError("certificate parameters must be positive");
      }
      return !find_spencer_witness(cert.coloring, cert.problem.m, cert.problem.p)
                  .has_value();
    case ProblemSpec::Kind::U:
    case ProblemSpec::Kind::Hind:
      if (cert.coloring.kind != Coloring::Domain::Subsets) {
        throw InputError("union certificate needs a subsets coloring");
      }
      if (cert.problem.n == 0) {
        throw InputError("certificate parameters must be positive");
      }
      return !find_union_witness(cert.coloring, cert.problem.n,
                                 cert.problem.kind == ProblemSpec::Kind::Hind)
                  .has_value();
  }
  throw InputError("unknown certificate problem");
}

}  // namespace hindman
