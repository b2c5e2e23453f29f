#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hindman/io.hpp"

using namespace hindman;

TEST_CASE("coloring round-trip") {
  Coloring interval = Coloring::interval(4, 2, {0, 1, 0, 1});
  CHECK(coloring_from_json(coloring_to_json(interval)) == interval);

  Coloring subsets = Coloring::subsets(3, 3, {0, 1, 2, 0, 1, 2, 0});
  CHECK(coloring_from_json(coloring_to_json(subsets)) == subsets);

  // Emission is deterministic byte for byte.
  CHECK(coloring_to_json(subsets) == coloring_to_json(subsets));
}

TEST_CASE("coloring validation on parse") {
  CHECK_THROWS_AS(coloring_from_json("{"), InputError);
  CHECK_THROWS_AS(coloring_from_json("[]"), InputError);
  CHECK_THROWS_AS(coloring_from_json(R"({"kind":"interval","k":2,"colors":1})"),
                  InputError);
  CHECK_THROWS_AS(
      coloring_from_json(R"({"kind":"interval","k":2,"colors":1,"assign":[0]})"),
      InputError);
  CHECK_THROWS_AS(
      coloring_from_json(R"({"kind":"interval","k":2,"colors":1,"assign":[0,1]})"),
      InputError);
  CHECK_THROWS_AS(
      coloring_from_json(R"({"kind":"circle","k":2,"colors":1,"assign":[0,0]})"),
      InputError);
}

TEST_CASE("witness round-trips") {
  SpencerWitness sw{1, 1, {1, 2, 4}};
  auto parsed = witness_from_json(witness_to_json(sw));
  REQUIRE(std::holds_alternative<SpencerWitness>(parsed));
  CHECK(std::get<SpencerWitness>(parsed) == sw);

  UnionWitness uw{2, true, {FiniteSet{0}, FiniteSet{1, 2}}};
  auto parsed_u = witness_from_json(witness_to_json(uw));
  REQUIRE(std::holds_alternative<UnionWitness>(parsed_u));
  CHECK(std::get<UnionWitness>(parsed_u) == uw);

  CHECK_THROWS_AS(witness_from_json(R"({"kind":"spencer","m":1,"p":1)"), InputError);
  CHECK_THROWS_AS(witness_from_json(R"({"kind":"other"})"), InputError);
}

TEST_CASE("numbers beyond the 53-bit safe range travel as strings") {
  SpencerWitness sw{1, 1, {1, std::uint64_t{1} << 60}};
  const std::string text = witness_to_json(sw);
  CHECK(text.find("\"1152921504606846976\"") != std::string::npos);
  auto parsed = witness_from_json(text);
  CHECK(std::get<SpencerWitness>(parsed) == sw);

  CHECK_THROWS_AS(witness_from_json(R"({"kind":"spencer","m":"x","p":1,"H":[1]})"),
                  InputError);
  CHECK_THROWS_AS(
      witness_from_json(R"({"kind":"spencer","m":"99999999999999999999999","p":1,"H":[1]})"),
      InputError);
}

TEST_CASE("certificate round-trip") {
  BadColoringCertificate cert{ProblemSpec::sp(2, 1),
                              Coloring::interval(4, 2, {0, 1, 1, 0})};
  auto back = certificate_from_json(certificate_to_json(cert));
  CHECK(back.problem.kind == ProblemSpec::Kind::Sp);
  CHECK(back.problem.m == 2);
  CHECK(back.problem.p == 1);
  CHECK(back.coloring == cert.coloring);

  BadColoringCertificate hind_cert{ProblemSpec::hind(2),
                                   Coloring::subsets(2, 2, {0, 0, 1})};
  auto back_h = certificate_from_json(certificate_to_json(hind_cert));
  CHECK(back_h.problem.kind == ProblemSpec::Kind::Hind);
  CHECK(back_h.problem.n == 2);

  CHECK_THROWS_AS(certificate_from_json(R"({"problem":"xx","coloring":{}})"),
                  InputError);
}

TEST_CASE("oracle table loading") {
  OracleTable t;
  load_oracle_table(R"({"u":[[1,1,1],[2,2,5]],"hind":[[2,2,5]]})", t);
  CHECK(t.u_entries.at({1, 1}) == 1);
  CHECK(t.u_entries.at({2, 2}) == 5);
  CHECK(t.hind_entries.at({2, 2}) == 5);

  OracleTable empty;
  load_oracle_table("{}", empty);
  CHECK(empty.u_entries.empty());

  CHECK_THROWS_AS(load_oracle_table(R"({"u":[[1,1]]})", t), InputError);
  CHECK_THROWS_AS(load_oracle_table(R"({"u":[[1,1,0]]})", t), InputError);
  CHECK_THROWS_AS(load_oracle_table("nonsense", t), InputError);
}

TEST_CASE("outcome serialization is stable") {
  SearchOutcome o;
  o.status = SearchStatus::Exact;
  o.value = 5;
  o.lower_certificate = Coloring::subsets(2, 2, {0, 0, 1});
  o.nodes_explored = 42;
  CHECK(outcome_to_json(o) == outcome_to_json(o));
  CHECK(outcome_to_json(o).find("\"exact\"") != std::string::npos);
}
