#include "hindman/replay.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace hindman {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

// Prefix sum n_0 + ... + n_i.
std::uint64_t prefix_sum(const std::vector<std::uint64_t>& n_seq, std::uint64_t i) {
  std::uint64_t s = 0;
  for (std::uint64_t j = 0; j <= i; ++j) s += n_seq[j];
  return s;
}

// Level-i fingerprint evaluation. All sets live inside S* whose elements are
// below 64, so subsets are element bitmasks and the bitmask doubles as the
// exp2 value the induced coloring consumes. The A-universe and each S_i are
// contiguous, which keeps subset enumeration a shift.
struct FingerprintContext {
  const IntervalLayout* layout;
  const ColorStar* colorstar;
  std::uint64_t level;
  std::uint64_t ta;  // |S_0 u ... u S_{i-1}|, the A-universe size
  std::uint64_t nb;  // k* - 1 - level, the B-universe size
  unsigned a_shift;  // A-universe starts at n_0
  std::vector<std::uint64_t> b_union;  // OR of higher first rows per B-mask

  FingerprintContext(const IntervalLayout& lay, const RowSelection& rows_above,
                     const ColorStar& cs, std::uint64_t lvl)
      : layout(&lay), colorstar(&cs), level(lvl) {
    if (lvl >= lay.k_star) throw InputError("level out of range");
    if (rows_above.rows.size() != lay.k_star) {
      throw StateError("row selection has wrong level count");
    }
    const std::uint64_t n0 = lay.n_seq[0];
    ta = prefix_sum(lay.n_seq, lvl) - n0;
    nb = lay.k_star - 1 - lvl;
    a_shift = static_cast<unsigned>(n0);
    if (ta + nb > 20) throw InputError("fingerprint context too large");
    std::vector<std::uint64_t> row_masks(nb);
    for (std::uint64_t j = 0; j < nb; ++j) {
      const auto& level_rows = rows_above.rows[lvl + 1 + j];
      if (level_rows.empty()) throw StateError("rows above this level not selected yet");
      row_masks[j] = level_rows[0].mask();
    }
    b_union.assign(std::uint64_t{1} << nb, 0);
    for (std::uint64_t b = 1; b < b_union.size(); ++b) {
      const auto low = static_cast<std::uint64_t>(std::countr_zero(b));
      b_union[b] = b_union[b & (b - 1)] | row_masks[low];
    }
  }

  std::vector<std::uint32_t> vector_for(std::uint64_t u_mask) const {
    std::vector<std::uint32_t> out;
    out.reserve((std::uint64_t{1} << ta) << nb);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << ta); ++a) {
      const std::uint64_t base = (a << a_shift) | u_mask;
      for (std::uint64_t b = 0; b < b_union.size(); ++b) {
        out.push_back(colorstar->at_mask(base | b_union[b]));
      }
    }
    return out;
  }
};

struct SelectedLevel {
  std::vector<FiniteSet> rows;
  std::uint64_t class_count = 0;
  std::uint64_t alpha_exponent = 0;
};

SelectedLevel select_rows_impl(const IntervalLayout& layout,
                               const ColorStar& colorstar, std::uint64_t level,
                               std::uint64_t count,
                               const RowSelection& rows_above,
                               std::uint64_t node_budget) {
  if (count == 0) throw InputError("row count must be positive");
  const FiniteSet& interval = layout.intervals[level];
  const std::uint64_t g = interval.size();
  if (g > 20) throw InputError("interval too large for row selection");
  if (count > g) {
    throw InfeasibleError("construction infeasible with supplied parameters: level " +
                          num(level) + " needs " + num(count) + " disjoint rows in " +
                          num(g) + " elements");
  }
  FingerprintContext ctx(layout, rows_above, colorstar, level);
  if ((std::uint64_t{1} << g) * ((std::uint64_t{1} << ctx.ta) << ctx.nb) >
      (std::uint64_t{1} << 26)) {
    throw InputError("fingerprint table too large");
  }

  const unsigned shift = interval.min_element();
  const std::uint64_t cells = (std::uint64_t{1} << g) - 1;
  std::vector<std::uint32_t> classes(cells);
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  for (std::uint64_t cell = 1; cell <= cells; ++cell) {
    auto fp = ctx.vector_for(cell << shift);
    auto [it, inserted] = ids.emplace(std::move(fp), static_cast<std::uint32_t>(ids.size()));
    classes[cell - 1] = it->second;
  }

  SelectedLevel sel;
  sel.class_count = ids.size();
  sel.alpha_exponent = ctx.ta + ctx.nb;
  // |c_i| <= c^{alpha_i}: the vector has alpha_i entries over c colors.
  if (colorstar.colors() == 1) {
    if (sel.class_count != 1) throw ConstructionBugError("one color produced several classes");
  } else if (sel.alpha_exponent < 64) {
    const BigNat limit = boost::multiprecision::pow(
        BigNat(colorstar.colors()), static_cast<unsigned>(sel.alpha_exponent));
    if (BigNat(sel.class_count) > limit) {
      throw ConstructionBugError("fingerprint class count exceeds c^alpha");
    }
  }

  Coloring recolored = Coloring::subsets(
      static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(sel.class_count),
      classes);
  bool exhausted = false;
  auto witness = find_union_witness(recolored, count, false, node_budget, exhausted);
  if (exhausted) {
    throw BudgetError("row selection budget exhausted at level " + num(level));
  }
  if (!witness) {
    throw InfeasibleError(
        "construction infeasible with supplied parameters: no " + num(count) +
        " disjoint subsets of S_" + num(level) + " with monochromatic unions");
  }
  const auto& elems = interval.elements();
  for (const FiniteSet& support : witness->d) {
    std::vector<unsigned> actual;
    actual.reserve(support.size());
    for (unsigned b : support) actual.push_back(elems[b]);
    sel.rows.emplace_back(std::move(actual));
  }
  return sel;
}

}  // namespace

IntervalLayout build_layout(std::uint64_t m, std::uint64_t p, std::uint64_t c,
                            const std::vector<std::uint64_t>& n_seq) {
  if (m == 0 || p == 0 || c == 0) throw InputError("parameters must be positive");
  if (n_seq.size() < 2) throw InputError("n-sequence needs at least two entries (k* >= 1)");
  for (std::size_t i = 1; i < n_seq.size(); ++i) {
    if (n_seq[i] == 0) throw InputError("n_" + num(i) + " must be positive");
  }
  std::uint64_t total = 0;
  for (std::uint64_t n : n_seq) total += n;
  if (total > 40) throw InputError("layout too large for desk-scale replay");

  IntervalLayout layout;
  layout.n_seq = n_seq;
  layout.k_star = n_seq.size() - 1;
  std::uint64_t lo = n_seq[0];
  for (std::uint64_t i = 0; i < layout.k_star; ++i) {
    const std::uint64_t hi = lo + n_seq[i + 1] - 1;
    layout.intervals.push_back(FiniteSet::interval(static_cast<unsigned>(lo),
                                                   static_cast<unsigned>(hi)));
    layout.s_star = layout.s_star.united(layout.intervals.back());
    lo = hi + 1;
  }
  return layout;
}

ColorStar::ColorStar(const Coloring& coloring, const IntervalLayout& layout)
    : coloring_(&coloring) {
  if (coloring.kind != Coloring::Domain::Interval) {
    throw InputError("the induced coloring needs an interval coloring");
  }
  const std::uint64_t needed = exp2(layout.s_star);
  if (coloring.k < needed) {
    throw InputError("interval too short for the layout: need k >= " + num(needed) +
                     ", have " + num(coloring.k));
  }
}

std::uint32_t ColorStar::operator()(const FiniteSet& a) const {
  if (a.empty()) throw DomainError("c* is defined on non-empty sets");
  return coloring_->color_at(a.mask());
}

ColorStar induced_colorstar(const Coloring& coloring, const IntervalLayout& layout) {
  return ColorStar(coloring, layout);
}

std::vector<std::uint32_t> fingerprint(const FiniteSet& u, std::uint64_t level,
                                       const IntervalLayout& layout,
                                       const RowSelection& rows_above,
                                       const ColorStar& colorstar) {
  if (u.empty()) throw InputError("fingerprint of empty set");
  if (level >= layout.k_star) throw InputError("level out of range");
  if (!u.is_subset_of(layout.intervals[level])) {
    throw InputError("u is not a subset of S_" + num(level));
  }
  FingerprintContext ctx(layout, rows_above, colorstar, level);
  return ctx.vector_for(u.mask());
}

std::vector<FiniteSet> select_rows(const IntervalLayout& layout,
                                   const ColorStar& colorstar,
                                   std::uint64_t level, std::uint64_t count,
                                   const RowSelection& rows_above,
                                   std::uint64_t node_budget) {
  if (level >= layout.k_star) throw InputError("level out of range");
  return select_rows_impl(layout, colorstar, level, count, rows_above, node_budget)
      .rows;
}

HindmanSelection hindman_select(const ColorStar& colorstar,
                                const std::vector<FiniteSet>& first_rows,
                                std::uint64_t p) {
  if (p == 0) throw InputError("p must be positive");
  const std::uint64_t ks = first_rows.size();
  if (ks == 0) throw InputError("no rows supplied");
  if (ks > 20) throw InputError("too many levels");
  for (std::size_t i = 0; i + 1 < first_rows.size(); ++i) {
    if (!precedes(first_rows[i], first_rows[i + 1])) {
      throw StateError("first rows are not <-ordered");
    }
  }
  if (p + 1 > ks) {
    throw InfeasibleError("need " + num(p + 1) + " ordered blocks but only " +
                          num(ks) + " levels are available");
  }

  std::vector<std::uint64_t> masks(ks);
  for (std::uint64_t i = 0; i < ks; ++i) masks[i] = first_rows[i].mask();
  const std::uint64_t cells = (std::uint64_t{1} << ks) - 1;
  std::vector<std::uint32_t> assign(cells);
  for (std::uint64_t f = 1; f <= cells; ++f) {
    std::uint64_t u = 0;
    for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
      u |= masks[std::countr_zero(rest)];
    }
    assign[f - 1] = colorstar.at_mask(u);
  }
  Coloring recolored = Coloring::subsets(static_cast<std::uint32_t>(ks),
                                         colorstar.colors(), std::move(assign));
  auto witness = find_union_witness(recolored, p + 1, true);
  if (!witness) {
    throw InfeasibleError("no ordered monochromatic selection: the supplied k* is "
                          "below what Hind(p+1,c) guarantees");
  }
  HindmanSelection sel;
  for (const FiniteSet& support : witness->d) {
    FiniteSet v;
    for (unsigned lvl : support) v = v.united(first_rows[lvl]);
    sel.supports.push_back(support);
    sel.v.push_back(std::move(v));
  }
  return sel;
}

AssembledWitness assemble_witness(const HindmanSelection& selection,
                                  const RowSelection& rows,
                                  const IntervalLayout& layout,
                                  std::uint64_t m, std::uint64_t p) {
  if (selection.v.size() != p + 1) {
    throw InputError("selection must carry v_0..v_p");
  }
  if (rows.rows.size() != layout.k_star) throw StateError("incomplete row selection");

  AssembledWitness result;
  const auto& e = selection.supports[p].elements();
  result.decomposition.levels.assign(e.begin(), e.end());
  const std::uint64_t pe = prefix_sum(layout.n_seq, e.front());
  if (pe >= 63) throw InputError("l* overflows the desk-scale range");
  const std::uint64_t l_star = std::uint64_t{1} << pe;
  result.decomposition.l_star = l_star;

  result.v_all = selection.v;
  for (std::uint64_t s = 1; s < l_star; ++s) {
    FiniteSet vs;
    for (unsigned lvl : e) {
      if (rows.rows[lvl].size() < l_star) {
        throw ConstructionBugError("level " + num(lvl) + " holds fewer than l* rows");
      }
      vs = vs.united(rows.rows[lvl][s]);
    }
    result.v_all.push_back(std::move(vs));
  }

  for (std::size_t i = 0; i < result.v_all.size(); ++i) {
    for (std::size_t j = i + 1; j < result.v_all.size(); ++j) {
      if (!result.v_all[i].disjoint_from(result.v_all[j])) {
        throw ConstructionBugError("assembled v's are not disjoint");
      }
    }
  }

  std::vector<std::uint64_t> a;
  a.reserve(result.v_all.size());
  for (const FiniteSet& v : result.v_all) a.push_back(exp2(v));

  for (std::uint64_t i = 0; i < p; ++i) {
    if (a[i] >= a[i + 1]) throw ConstructionBugError("head of H is not increasing");
  }
  const std::uint64_t head_floor = std::uint64_t{1} << layout.n_seq[0];
  if (a[0] < head_floor || head_floor < m) {
    throw ConstructionBugError("a_0 >= 2^{n_0} >= m failed");
  }
  const std::uint64_t l = p + l_star;
  if (a[p - 1] > l_star || l_star > l) {
    throw ConstructionBugError("a_{p-1} <= l* <= l failed");
  }
  for (std::size_t i = p; i < a.size(); ++i) {
    if (a[p - 1] >= a[i]) throw ConstructionBugError("a_{p-1} < a_i (i >= p) failed");
  }

  std::vector<std::uint64_t> H = a;
  std::sort(H.begin(), H.end());
  for (std::size_t i = 0; i + 1 < H.size(); ++i) {
    if (H[i] == H[i + 1]) throw ConstructionBugError("H has duplicate elements");
  }
  if (H.size() != l) throw ConstructionBugError("|H| != p + l*");

  result.witness = SpencerWitness{m, p, std::move(H)};
  return result;
}

bool audit_row_equivalence(const RowSelection& rows, const ColorStar& colorstar,
                           const IntervalLayout& layout) {
  if (rows.rows.size() != layout.k_star) throw StateError("incomplete row selection");
  for (std::uint64_t level = 0; level < layout.k_star; ++level) {
    const auto& level_rows = rows.rows[level];
    if (level_rows.empty()) throw StateError("level without rows");
    if (level_rows.size() > 20) throw InputError("too many rows to audit");
    FingerprintContext ctx(layout, rows, colorstar, level);
    std::vector<std::uint64_t> masks(level_rows.size());
    for (std::size_t i = 0; i < level_rows.size(); ++i) masks[i] = level_rows[i].mask();
    std::vector<std::uint32_t> reference;
    for (std::uint64_t f = 1; f < (std::uint64_t{1} << level_rows.size()); ++f) {
      std::uint64_t u = 0;
      for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
        u |= masks[std::countr_zero(rest)];
      }
      auto fp = ctx.vector_for(u);
      if (f == 1) {
        reference = std::move(fp);
      } else if (fp != reference) {
        return false;
      }
    }
  }
  return true;
}

ExtractResult extract(std::uint64_t m, std::uint64_t p, std::uint32_t c,
                      const Coloring& coloring, OracleTable& oracles,
                      const SearchBudget& budget,
                      const std::optional<std::vector<std::uint64_t>>& n_seq_override) {
  if (coloring.colors != c) {
    throw InputError("coloring declares " + num(coloring.colors) +
                     " colors, expected " + num(c));
  }
  std::vector<std::uint64_t> n_seq;
  if (n_seq_override) {
    n_seq = *n_seq_override;
  } else {
    BoundTrace trace = spencer_bound(m, p, c, oracles);
    for (const ExtNat& n : trace.n_seq) {
      if (!n.is_exact() || n.value() > BigNat(std::uint64_t{1} << 40)) {
        throw InputError("bound recursion did not resolve to desk-scale values; "
                         "supply an explicit n-sequence");
      }
      n_seq.push_back(static_cast<std::uint64_t>(n.value()));
    }
  }

  IntervalLayout layout = build_layout(m, p, c, n_seq);
  ColorStar colorstar = induced_colorstar(coloring, layout);

  ReplayTranscript transcript;
  transcript.m = m;
  transcript.p = p;
  transcript.c = c;
  transcript.n_seq = n_seq;
  transcript.k_star = layout.k_star;
  transcript.intervals = layout.intervals;

  RowSelection rows;
  rows.rows.resize(layout.k_star);
  transcript.levels.resize(layout.k_star);
  for (std::uint64_t down = 0; down < layout.k_star; ++down) {
    const std::uint64_t level = layout.k_star - 1 - down;
    const std::uint64_t pi = prefix_sum(n_seq, level);
    if (pi > 20) {
      throw InfeasibleError("m_" + num(level) + " = 2^" + num(pi) +
                            " rows cannot fit a desk-scale interval");
    }
    const std::uint64_t count = std::uint64_t{1} << pi;
    SelectedLevel sel =
        select_rows_impl(layout, colorstar, level, count, rows, budget.max_nodes);
    rows.rows[level] = sel.rows;
    ReplayLevelRecord rec;
    rec.level = level;
    rec.row_count = count;
    rec.alpha_exponent = sel.alpha_exponent;
    rec.class_count = sel.class_count;
    rec.rows = sel.rows;
    transcript.levels[level] = std::move(rec);
  }

  transcript.audit_ok = audit_row_equivalence(rows, colorstar, layout);
  if (!transcript.audit_ok) {
    throw ConstructionBugError("selected rows fail the fingerprint equivalence audit");
  }

  std::vector<FiniteSet> first_rows;
  first_rows.reserve(layout.k_star);
  for (const auto& level_rows : rows.rows) first_rows.push_back(level_rows[0]);
  HindmanSelection hsel = hindman_select(colorstar, first_rows, p);
  AssembledWitness assembled = assemble_witness(hsel, rows, layout, m, p);

  transcript.v_head = hsel.v;
  transcript.v_tail.assign(assembled.v_all.begin() + p + 1, assembled.v_all.end());
  transcript.decomposition = assembled.decomposition;
  transcript.witness = assembled.witness;

  CheckReport report = verify_spencer(coloring, assembled.witness);
  transcript.verified = report.ok;
  if (!report.ok) {
    throw ConstructionBugError("extract produced an invalid witness: " + report.violation);
  }
  return ExtractResult{assembled.witness, std::move(transcript)};
}

}  // namespace hindman
