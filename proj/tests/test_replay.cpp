#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hindman/replay.hpp"

using namespace hindman;

namespace {

Coloring mono(std::uint32_t k, std::uint32_t colors = 1) {
  return Coloring::interval(k, colors, std::vector<std::uint32_t>(k, 0));
}

OracleTable exact_oracles() {
  OracleTable t;
  t.fallback = OracleFallback::ExactSearch;
  t.search_budget.max_k = 12;
  return t;
}

SearchBudget small_budget() {
  SearchBudget b;
  b.max_nodes = 1'000'000;
  return b;
}

}  // namespace

TEST_CASE("build_layout") {
  IntervalLayout lay = build_layout(1, 1, 1, {0, 1, 2});
  CHECK(lay.k_star == 2);
  CHECK(lay.intervals[0] == FiniteSet{0});
  CHECK(lay.intervals[1] == FiniteSet{1, 2});
  CHECK(lay.s_star == FiniteSet{0, 1, 2});

  IntervalLayout unit = build_layout(2, 1, 1, {1, 1, 1});
  CHECK(unit.intervals[0] == FiniteSet{1});
  CHECK(unit.intervals[1] == FiniteSet{2});

  CHECK_THROWS_AS(build_layout(1, 1, 1, {3}), InputError);
  CHECK_THROWS_AS(build_layout(1, 1, 1, {0, 0, 2}), InputError);
  CHECK_THROWS_AS(build_layout(1, 1, 1, {0, 30, 30}), InputError);
}

TEST_CASE("induced coloring and its length requirement") {
  IntervalLayout lay = build_layout(1, 1, 1, {0, 1, 2});
  Coloring ok = mono(8);
  ColorStar cs = induced_colorstar(ok, lay);
  CHECK(cs(FiniteSet{0}) == color_of(ok, 1));
  CHECK(cs(FiniteSet{0, 1, 2}) == color_of(ok, 7));
  CHECK_THROWS_AS(cs(FiniteSet{}), DomainError);

  // exp2(S*) = 7 exceeds a length-4 interval: the bound_operative gap made
  // concrete.
  CHECK_THROWS_AS(induced_colorstar(mono(4), lay), InputError);
  CHECK_NOTHROW(induced_colorstar(mono(7), lay));
}

TEST_CASE("fingerprint shapes and one-color collapse") {
  IntervalLayout lay = build_layout(1, 1, 1, {0, 1, 2});
  Coloring coloring = mono(8);
  ColorStar cs = induced_colorstar(coloring, lay);

  RowSelection rows;
  rows.rows.resize(2);
  // Top level first: B ranges over the empty set only.
  auto fp_top = fingerprint(FiniteSet{1}, 1, lay, rows, cs);
  CHECK(fp_top.size() == 2);  // A over P({0}), B over P(empty)

  rows.rows[1] = {FiniteSet{1}, FiniteSet{2}};
  auto fp0 = fingerprint(FiniteSet{0}, 0, lay, rows, cs);
  CHECK(fp0.size() == 2);  // A over P(empty), B over P({1})

  CHECK(fingerprint(FiniteSet{2}, 1, lay, rows, cs) == fp_top);

  CHECK_THROWS_AS(fingerprint(FiniteSet{0}, 1, lay, rows, cs), InputError);
  RowSelection missing;
  missing.rows.resize(2);
  CHECK_THROWS_AS(fingerprint(FiniteSet{0}, 0, lay, missing, cs), StateError);
}

TEST_CASE("select_rows on the tiny instance") {
  IntervalLayout lay = build_layout(1, 1, 1, {0, 1, 2});
  Coloring coloring = mono(8);
  ColorStar cs = induced_colorstar(coloring, lay);
  RowSelection rows;
  rows.rows.resize(2);

  auto level1 = select_rows(lay, cs, 1, 2, rows, 1'000'000);
  REQUIRE(level1.size() == 2);
  CHECK(level1[0] == FiniteSet{1});
  CHECK(level1[1] == FiniteSet{2});
  rows.rows[1] = level1;

  auto level0 = select_rows(lay, cs, 0, 1, rows, 1'000'000);
  REQUIRE(level0.size() == 1);
  CHECK(level0[0] == FiniteSet{0});
}

TEST_CASE("select_rows pigeonhole infeasibility") {
  IntervalLayout lay = build_layout(1, 1, 1, {0, 1, 1});
  Coloring coloring = mono(8);
  ColorStar cs = induced_colorstar(coloring, lay);
  RowSelection rows;
  rows.rows.resize(2);
  CHECK_THROWS_AS(select_rows(lay, cs, 1, 2, rows, 1'000'000), InfeasibleError);
}

TEST_CASE("hindman_select") {
  IntervalLayout lay = build_layout(1, 1, 1, {0, 1, 2});
  Coloring coloring = mono(8);
  ColorStar cs = induced_colorstar(coloring, lay);

  std::vector<FiniteSet> firsts{FiniteSet{0}, FiniteSet{1}};
  HindmanSelection sel = hindman_select(cs, firsts, 1);
  REQUIRE(sel.v.size() == 2);
  CHECK(sel.v[0] == FiniteSet{0});
  CHECK(sel.v[1] == FiniteSet{1});
  CHECK(sel.supports[1] == FiniteSet{1});

  CHECK_THROWS_AS(hindman_select(cs, firsts, 2), InfeasibleError);
}

TEST_CASE("extract on the tiny instance replays the construction") {
  OracleTable oracles = exact_oracles();
  ExtractResult res = extract(1, 1, 1, mono(8), oracles, small_budget());
  CHECK(res.witness.H == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(res.witness.m == 1);
  CHECK(res.witness.p == 1);

  const ReplayTranscript& t = res.transcript;
  CHECK(t.k_star == 2);
  CHECK(t.n_seq == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(t.audit_ok);
  CHECK(t.verified);
  CHECK(t.decomposition.levels == std::vector<std::uint64_t>{1});
  CHECK(t.decomposition.l_star == 2);
  REQUIRE(t.levels.size() == 2);
  CHECK(t.levels[1].rows == std::vector<FiniteSet>{FiniteSet{1}, FiniteSet{2}});
  CHECK(t.levels[0].rows == std::vector<FiniteSet>{FiniteSet{0}});
  for (const auto& rec : t.levels) {
    CHECK(rec.class_count == 1);  // one color collapses every fingerprint
  }
  CHECK(t.v_head ==
        std::vector<FiniteSet>{FiniteSet{0}, FiniteSet{1}});
  CHECK(t.v_tail == std::vector<FiniteSet>{FiniteSet{2}});

  CHECK(verify_spencer(mono(8), res.witness).ok);
}

TEST_CASE("extract rejects a too-short interval") {
  OracleTable oracles = exact_oracles();
  CHECK_THROWS_AS(extract(1, 1, 1, mono(4), oracles, small_budget()), InputError);
}

TEST_CASE("extract with m = 2 keeps the head above m") {
  OracleTable oracles = exact_oracles();
  ExtractResult res = extract(2, 1, 1, mono(2048), oracles, small_budget());
  CHECK(res.witness.H.front() >= 2);
  CHECK(res.witness.H ==
        std::vector<std::uint64_t>{2, 8, 16, 32, 64, 128, 256, 512, 1024});
  CHECK(res.transcript.decomposition.l_star == 8);
  CHECK(res.transcript.verified);
}

TEST_CASE("extract with a supplied n-sequence") {
  OracleTable oracles = exact_oracles();
  // Too small: level 1 would need two rows inside a single element.
  CHECK_THROWS_AS(extract(1, 1, 1, mono(8), oracles, small_budget(),
                          std::vector<std::uint64_t>{0, 1, 1}),
                  InfeasibleError);

  // A two-color declaration over a constant assignment replays fine.
  Coloring constant2 = mono(8, 2);
  ExtractResult res = extract(1, 1, 2, constant2, oracles, small_budget(),
                              std::vector<std::uint64_t>{0, 1, 2});
  CHECK(res.witness.H == std::vector<std::uint64_t>{1, 2, 4});
  for (const auto& rec : res.transcript.levels) {
    CHECK(rec.class_count <= 4);  // c^alpha with c=2, alpha=2
  }

  // A genuine two-coloring that separates the fingerprints of {1} and {2}
  // leaves no two-row selection at level 1.
  Coloring split = Coloring::interval(8, 2, {0, 0, 0, 1, 0, 0, 0, 0});
  CHECK_THROWS_AS(extract(1, 1, 2, split, oracles, small_budget(),
                          std::vector<std::uint64_t>{0, 1, 2}),
                  InfeasibleError);
}

TEST_CASE("audit_row_equivalence flags broken selections") {
  IntervalLayout lay = build_layout(1, 1, 2, {0, 1, 2});
  Coloring split = Coloring::interval(8, 2, {0, 0, 0, 1, 0, 0, 0, 0});
  ColorStar cs = induced_colorstar(split, lay);

  RowSelection rows;
  rows.rows = {{FiniteSet{0}}, {FiniteSet{1}, FiniteSet{2}}};
  // {1} and {2} fingerprint differently under this coloring.
  CHECK_FALSE(audit_row_equivalence(rows, cs, lay));

  Coloring constant = mono(8, 2);
  ColorStar cs1 = induced_colorstar(constant, lay);
  CHECK(audit_row_equivalence(rows, cs1, lay));
}

TEST_CASE("verify_spencer reports the first violation") {
  CHECK(verify_spencer(mono(8), SpencerWitness{1, 1, {1, 2, 4}}).ok);

  auto sum_out = verify_spencer(mono(4), SpencerWitness{1, 1, {1, 2, 4}});
  CHECK_FALSE(sum_out.ok);
  CHECK(sum_out.violation == "sum 7 outside [4]");

  auto m_violated = verify_spencer(mono(8), SpencerWitness{3, 1, {1, 2}});
  CHECK_FALSE(m_violated.ok);
  CHECK(m_violated.violation.find("m <= a_0 violated") == 0);

  auto p_violated = verify_spencer(mono(8), SpencerWitness{1, 3, {1, 2}});
  CHECK_FALSE(p_violated.ok);
  CHECK(p_violated.violation.find("p <= l violated") == 0);

  auto tail = verify_spencer(mono(8), SpencerWitness{1, 2, {1, 5}});
  CHECK_FALSE(tail.ok);
  CHECK(tail.violation.find("a_{p-1} <= l violated") == 0);

  Coloring two = Coloring::interval(3, 2, {0, 0, 1});
  auto not_mono = verify_spencer(two, SpencerWitness{1, 1, {1, 2}});
  CHECK_FALSE(not_mono.ok);
  CHECK(not_mono.violation.find("not monochromatic") != std::string::npos);
}

TEST_CASE("verify_union") {
  Coloring sub = Coloring::subsets(2, 1, {0, 0, 0});
  UnionWitness ok{2, true, {FiniteSet{0}, FiniteSet{1}}};
  CHECK(verify_union(sub, ok).ok);

  UnionWitness overlap{2, false, {FiniteSet{0}, FiniteSet{0, 1}}};
  CHECK_FALSE(verify_union(sub, overlap).ok);

  Coloring broken = Coloring::subsets(2, 2, {0, 0, 1});
  CHECK_FALSE(verify_union(broken, ok).ok);

  UnionWitness unordered{2, true, {FiniteSet{1}, FiniteSet{0}}};
  CHECK_FALSE(verify_union(sub, unordered).ok);
}
