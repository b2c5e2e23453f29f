// Command-line surface over the search, bounds and proof-replay modules.
// Exit codes: 0 success/valid, 1 invalid-or-infeasible, 2 budget-exhausted,
// 3 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hindman/bounds.hpp"
#include "hindman/io.hpp"
#include "hindman/replay.hpp"
#include "hindman/rng.hpp"
#include "hindman/search.hpp"

namespace {

using namespace hindman;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

struct ComputeOptions {
  std::uint64_t m = 1, p = 1, n = 1;
  std::uint32_t c = 1;
  SearchBudget budget;
  bool naive = false;
  std::string cert_path;
};

int run_compute(ProblemSpec::Kind kind, const ComputeOptions& opt) {
  ProblemSpec problem;
  SearchOutcome outcome;
  switch (kind) {
    case ProblemSpec::Kind::Sp:
      problem = ProblemSpec::sp(opt.m, opt.p);
      outcome = opt.naive ? naive_compute(problem, opt.c, opt.budget)
                          : compute_sp(opt.m, opt.p, opt.c, opt.budget);
      break;
    case ProblemSpec::Kind::U:
      problem = ProblemSpec::u(opt.n);
      outcome = opt.naive ? naive_compute(problem, opt.c, opt.budget)
                          : compute_u(opt.n, opt.c, opt.budget);
      break;
    case ProblemSpec::Kind::Hind:
      problem = ProblemSpec::hind(opt.n);
      outcome = opt.naive ? naive_compute(problem, opt.c, opt.budget)
                          : compute_hind(opt.n, opt.c, opt.budget);
      break;
  }
  if (outcome.status == SearchStatus::Exact) {
    std::cout << "exact " << outcome.value << "\n";
  } else {
    std::cout << "unknown >= " << outcome.value << "\n";
  }
  std::cerr << "nodes explored: " << outcome.nodes_explored << "\n";
  if (!opt.cert_path.empty()) {
    if (outcome.lower_certificate) {
      write_file(opt.cert_path,
                 certificate_to_json({problem, *outcome.lower_certificate}) + "\n");
    } else {
      std::cerr << "no lower certificate at value 1; nothing written\n";
    }
  }
  return outcome.status == SearchStatus::Exact ? kExitOk : kExitBudget;
}

OracleTable make_oracles(const std::string& spec, const SearchBudget& budget) {
  OracleTable table;
  table.search_budget = budget;
  if (spec == "exact") {
    table.fallback = OracleFallback::ExactSearch;
  } else if (spec == "symbolic") {
    table.fallback = OracleFallback::Symbolic;
  } else if (spec.rfind("table:", 0) == 0) {
    table.fallback = OracleFallback::Symbolic;
    load_oracle_table(read_file(spec.substr(6)), table);
  } else {
    throw InputError("--oracle must be exact, symbolic or table:<file>");
  }
  return table;
}

std::vector<std::uint64_t> parse_n_seq(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("--n-seq: empty entry");
    std::uint64_t v = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9') throw InputError("--n-seq: bad entry '" + item + "'");
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    out.push_back(v);
  }
  if (out.empty()) throw InputError("--n-seq: empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitary Hindman / Spencer number toolkit"};
  app.require_subcommand(1);

  ComputeOptions sp_opt, u_opt, hind_opt;
  auto add_budget_flags = [](CLI::App* cmd, ComputeOptions& opt) {
    cmd->add_option("--max-k", opt.budget.max_k, "deepest k to try");
    cmd->add_option("--max-nodes", opt.budget.max_nodes, "search node limit");
    cmd->add_option("--threads", opt.budget.threads, "worker threads");
    cmd->add_flag("--naive", opt.naive, "use the brute-force oracle");
    cmd->add_option("--cert", opt.cert_path, "write the lower-bound certificate here");
  };
  sp_opt.budget.max_nodes = u_opt.budget.max_nodes = hind_opt.budget.max_nodes =
      10'000'000;

  CLI::App* sp_cmd = app.add_subcommand("sp", "compute Sp(m,p,c)");
  sp_cmd->add_option("--m", sp_opt.m, "minimum of H")->required();
  sp_cmd->add_option("--p", sp_opt.p, "head length")->required();
  sp_cmd->add_option("--c", sp_opt.c, "colors")->required();
  add_budget_flags(sp_cmd, sp_opt);

  CLI::App* u_cmd = app.add_subcommand("u", "compute U(n,c)");
  u_cmd->add_option("--n", u_opt.n, "disjoint unions wanted")->required();
  u_cmd->add_option("--c", u_opt.c, "colors")->required();
  add_budget_flags(u_cmd, u_opt);

  CLI::App* hind_cmd = app.add_subcommand("hind", "compute Hind(n,c)");
  hind_cmd->add_option("--n", hind_opt.n, "ordered unions wanted")->required();
  hind_cmd->add_option("--c", hind_opt.c, "colors")->required();
  add_budget_flags(hind_cmd, hind_opt);

  std::uint64_t bound_m = 1, bound_p = 1;
  std::uint32_t bound_c = 1;
  std::string oracle_spec = "exact";
  std::uint64_t bits = kDefaultBitBudget;
  SearchBudget bound_budget;
  bound_budget.max_nodes = 10'000'000;
  CLI::App* bound_cmd = app.add_subcommand("bound", "run the recursive upper bound");
  bound_cmd->add_option("--m", bound_m)->required();
  bound_cmd->add_option("--p", bound_p)->required();
  bound_cmd->add_option("--c", bound_c)->required();
  bound_cmd->add_option("--oracle", oracle_spec, "exact | symbolic | table:<file>");
  bound_cmd->add_option("--bits", bits, "bit budget for exact materialization");
  bound_cmd->add_option("--max-k", bound_budget.max_k);
  bound_cmd->add_option("--max-nodes", bound_budget.max_nodes);
  bound_cmd->add_option("--threads", bound_budget.threads);

  std::uint64_t ext_m = 1, ext_p = 1;
  std::uint32_t ext_c = 1;
  std::string ext_coloring, ext_nseq, ext_transcript;
  SearchBudget ext_budget;
  ext_budget.max_nodes = 10'000'000;
  CLI::App* extract_cmd = app.add_subcommand("extract", "replay the witness construction");
  extract_cmd->add_option("--m", ext_m)->required();
  extract_cmd->add_option("--p", ext_p)->required();
  extract_cmd->add_option("--c", ext_c)->required();
  extract_cmd->add_option("--coloring", ext_coloring, "coloring JSON file")->required();
  extract_cmd->add_option("--n-seq", ext_nseq, "comma-separated n-sequence override");
  extract_cmd->add_option("--transcript", ext_transcript, "write the replay transcript here");
  extract_cmd->add_option("--max-nodes", ext_budget.max_nodes);

  std::string verify_witness, verify_coloring, verify_cert;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a witness or certificate");
  verify_cmd->add_option("--witness", verify_witness, "witness JSON file");
  verify_cmd->add_option("--coloring", verify_coloring, "coloring JSON file");
  verify_cmd->add_option("--cert", verify_cert, "bad-coloring certificate JSON file");

  std::string gen_kind = "interval";
  std::uint32_t gen_k = 1, gen_colors = 1;
  std::uint64_t gen_seed = 0;
  CLI::App* gen_cmd = app.add_subcommand("gen-coloring", "emit a seeded pseudo-random coloring");
  gen_cmd->add_option("--kind", gen_kind, "interval | subsets")->required();
  gen_cmd->add_option("--k", gen_k)->required();
  gen_cmd->add_option("--colors", gen_colors)->required();
  gen_cmd->add_option("--seed", gen_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (sp_cmd->parsed()) return run_compute(ProblemSpec::Kind::Sp, sp_opt);
    if (u_cmd->parsed()) return run_compute(ProblemSpec::Kind::U, u_opt);
    if (hind_cmd->parsed()) return run_compute(ProblemSpec::Kind::Hind, hind_opt);

    if (bound_cmd->parsed()) {
      OracleTable oracles = make_oracles(oracle_spec, bound_budget);
      try {
        BoundTrace trace = spencer_bound(bound_m, bound_p, bound_c, oracles, bits);
        std::cout << render(trace);
        return kExitOk;
      } catch (const OracleBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << render(e.partial);
        return kExitBudget;
      }
    }

    if (extract_cmd->parsed()) {
      Coloring coloring = coloring_from_json(read_file(ext_coloring));
      OracleTable oracles;
      oracles.fallback = OracleFallback::ExactSearch;
      oracles.search_budget = ext_budget;
      std::optional<std::vector<std::uint64_t>> nseq;
      if (!ext_nseq.empty()) nseq = parse_n_seq(ext_nseq);
      ExtractResult result = extract(ext_m, ext_p, ext_c, coloring, oracles,
                                     ext_budget, nseq);
      if (!ext_transcript.empty()) {
        write_file(ext_transcript, transcript_to_json(result.transcript) + "\n");
      }
      std::cout << witness_to_json(result.witness) << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (!verify_cert.empty()) {
        if (!verify_witness.empty() || !verify_coloring.empty()) {
          throw InputError("--cert excludes --witness/--coloring");
        }
        BadColoringCertificate cert = certificate_from_json(read_file(verify_cert));
        if (verify_certificate(cert)) {
          std::cout << "VALID\n";
          return kExitOk;
        }
        std::cout << "INVALID: a witness exists for the certified coloring\n";
        return kExitInvalid;
      }
      if (verify_witness.empty() || verify_coloring.empty()) {
        throw InputError("verify needs --witness and --coloring, or --cert");
      }
      Coloring coloring = coloring_from_json(read_file(verify_coloring));
      WitnessFile witness = witness_from_json(read_file(verify_witness));
      CheckReport report =
          std::holds_alternative<SpencerWitness>(witness)
              ? verify_spencer(coloring, std::get<SpencerWitness>(witness))
              : verify_union(coloring, std::get<UnionWitness>(witness));
      if (report.ok) {
        std::cout << "VALID\n";
        return kExitOk;
      }
      std::cout << "INVALID: " << report.violation << "\n";
      return kExitInvalid;
    }

    if (gen_cmd->parsed()) {
      if (gen_colors == 0) throw InputError("--colors must be positive");
      SplitMix64 rng(gen_seed);
      if (gen_kind == "interval") {
        std::vector<std::uint32_t> assign(gen_k);
        for (auto& a : assign) a = static_cast<std::uint32_t>(rng.below(gen_colors));
        std::cout << coloring_to_json(Coloring::interval(gen_k, gen_colors, assign))
                  << "\n";
      } else if (gen_kind == "subsets") {
        if (gen_k == 0 || gen_k > 22) throw InputError("--k out of range for subsets");
        std::vector<std::uint32_t> assign((std::uint64_t{1} << gen_k) - 1);
        for (auto& a : assign) a = static_cast<std::uint32_t>(rng.below(gen_colors));
        std::cout << coloring_to_json(Coloring::subsets(gen_k, gen_colors, assign))
                  << "\n";
      } else {
        throw InputError("--kind must be interval or subsets");
      }
      return kExitOk;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
