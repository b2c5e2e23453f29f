#include "hindman/io.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

namespace hindman {

namespace {

using nlohmann::json;

constexpr std::uint64_t kSafeInt = (std::uint64_t{1} << 53) - 1;

json nat_to_json(std::uint64_t v) {
  if (v <= kSafeInt) return json(v);
  return json(std::to_string(v));
}

std::uint64_t nat_from_json(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.size() > 20) throw InputError(std::string(what) + ": bad number");
    std::uint64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw InputError(std::string(what) + ": bad number");
      const std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw InputError(std::string(what) + ": number out of range");
      }
      v = v * 10 + digit;
    }
    return v;
  }
  throw InputError(std::string(what) + ": expected a natural number");
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field: ") + key);
  return *it;
}

json set_to_json(const FiniteSet& s) {
  json arr = json::array();
  for (unsigned e : s) arr.push_back(e);
  return arr;
}

FiniteSet set_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
  std::vector<unsigned> elems;
  for (const auto& e : j) {
    elems.push_back(static_cast<unsigned>(nat_from_json(e, what)));
  }
  FiniteSet s(elems);
  if (s.size() != elems.size()) throw InputError(std::string(what) + ": duplicate elements");
  return s;
}

json coloring_to_obj(const Coloring& coloring) {
  json j;
  j["kind"] = coloring.kind == Coloring::Domain::Interval ? "interval" : "subsets";
  j["k"] = coloring.k;
  j["colors"] = coloring.colors;
  j["assign"] = coloring.assign;
  return j;
}

Coloring coloring_from_obj(const json& j) {
  if (!j.is_object()) throw InputError("coloring: expected an object");
  const std::string kind = field(j, "kind").get<std::string>();
  const auto k = static_cast<std::uint32_t>(nat_from_json(field(j, "k"), "k"));
  const auto colors =
      static_cast<std::uint32_t>(nat_from_json(field(j, "colors"), "colors"));
  const json& assign_j = field(j, "assign");
  if (!assign_j.is_array()) throw InputError("coloring: assign must be an array");
  std::vector<std::uint32_t> assign;
  assign.reserve(assign_j.size());
  for (const auto& a : assign_j) {
    assign.push_back(static_cast<std::uint32_t>(nat_from_json(a, "assign")));
  }
  if (kind == "interval") return Coloring::interval(k, colors, std::move(assign));
  if (kind == "subsets") return Coloring::subsets(k, colors, std::move(assign));
  throw InputError("coloring: kind must be \"interval\" or \"subsets\"");
}

json spencer_to_obj(const SpencerWitness& w) {
  json j;
  j["kind"] = "spencer";
  j["m"] = nat_to_json(w.m);
  j["p"] = nat_to_json(w.p);
  json h = json::array();
  for (std::uint64_t a : w.H) h.push_back(nat_to_json(a));
  j["H"] = h;
  return j;
}

json union_to_obj(const UnionWitness& w) {
  json j;
  j["kind"] = "union";
  j["ordered"] = w.ordered;
  j["n"] = nat_to_json(w.n);
  json d = json::array();
  for (const FiniteSet& s : w.d) d.push_back(set_to_json(s));
  j["d"] = d;
  return j;
}

}  // namespace

std::string coloring_to_json(const Coloring& coloring) {
  return coloring_to_obj(coloring).dump();
}

Coloring coloring_from_json(const std::string& text) {
  return coloring_from_obj(parse(text));
}

std::string witness_to_json(const SpencerWitness& w) { return spencer_to_obj(w).dump(); }

std::string witness_to_json(const UnionWitness& w) { return union_to_obj(w).dump(); }

WitnessFile witness_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw InputError("witness: expected an object");
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "spencer") {
    SpencerWitness w;
    w.m = nat_from_json(field(j, "m"), "m");
    w.p = nat_from_json(field(j, "p"), "p");
    const json& h = field(j, "H");
    if (!h.is_array()) throw InputError("witness: H must be an array");
    for (const auto& a : h) w.H.push_back(nat_from_json(a, "H"));
    return w;
  }
  if (kind == "union") {
    UnionWitness w;
    const json& ord = field(j, "ordered");
    if (!ord.is_boolean()) throw InputError("witness: ordered must be a boolean");
    w.ordered = ord.get<bool>();
    w.n = nat_from_json(field(j, "n"), "n");
    const json& d = field(j, "d");
    if (!d.is_array()) throw InputError("witness: d must be an array");
    for (const auto& s : d) w.d.push_back(set_from_json(s, "d"));
    return w;
  }
  throw InputError("witness: kind must be \"spencer\" or \"union\"");
}

std::string certificate_to_json(const BadColoringCertificate& cert) {
  json j;
  switch (cert.problem.kind) {
    case ProblemSpec::Kind::Sp:
      j["problem"] = "sp";
      j["m"] = nat_to_json(cert.problem.m);
      j["p"] = nat_to_json(cert.problem.p);
      break;
    case ProblemSpec::Kind::U:
      j["problem"] = "u";
      j["n"] = nat_to_json(cert.problem.n);
      break;
    case ProblemSpec::Kind::Hind:
      j["problem"] = "hind";
      j["n"] = nat_to_json(cert.problem.n);
      break;
  }
  j["coloring"] = coloring_to_obj(cert.coloring);
  return j.dump();
}

BadColoringCertificate certificate_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw InputError("certificate: expected an object");
  const std::string problem = field(j, "problem").get<std::string>();
  BadColoringCertificate cert{ProblemSpec{}, coloring_from_obj(field(j, "coloring"))};
  if (problem == "sp") {
    cert.problem = ProblemSpec::sp(nat_from_json(field(j, "m"), "m"),
                                   nat_from_json(field(j, "p"), "p"));
  } else if (problem == "u") {
    cert.problem = ProblemSpec::u(nat_from_json(field(j, "n"), "n"));
  } else if (problem == "hind") {
    cert.problem = ProblemSpec::hind(nat_from_json(field(j, "n"), "n"));
  } else {
    throw InputError("certificate: problem must be sp, u or hind");
  }
  return cert;
}

void load_oracle_table(const std::string& text, OracleTable& table) {
  json j = parse(text);
  if (!j.is_object()) throw InputError("oracle table: expected an object");
  auto load = [](const json& arr, auto& entries) {
    if (!arr.is_array()) throw InputError("oracle table: entries must be arrays");
    for (const auto& row : arr) {
      if (!row.is_array() || row.size() != 3) {
        throw InputError("oracle table: each entry is [n, c, value]");
      }
      const std::uint64_t n = nat_from_json(row[0], "n");
      const std::uint64_t c = nat_from_json(row[1], "c");
      const std::uint64_t v = nat_from_json(row[2], "value");
      if (n == 0 || c == 0 || v == 0) throw InputError("oracle table: entries must be positive");
      entries[{n, c}] = v;
    }
  };
  if (j.contains("u")) load(j["u"], table.u_entries);
  if (j.contains("hind")) load(j["hind"], table.hind_entries);
}

std::string transcript_to_json(const ReplayTranscript& t) {
  json j;
  j["m"] = nat_to_json(t.m);
  j["p"] = nat_to_json(t.p);
  j["c"] = nat_to_json(t.c);
  j["k_star"] = t.k_star;
  json nseq = json::array();
  for (std::uint64_t n : t.n_seq) nseq.push_back(nat_to_json(n));
  j["n_seq"] = nseq;
  json intervals = json::array();
  for (const FiniteSet& s : t.intervals) {
    intervals.push_back(json::array({s.min_element(), s.max_element()}));
  }
  j["intervals"] = intervals;
  json levels = json::array();
  for (const ReplayLevelRecord& rec : t.levels) {
    json lj;
    lj["level"] = rec.level;
    lj["row_count"] = nat_to_json(rec.row_count);
    lj["alpha_exponent"] = rec.alpha_exponent;
    lj["class_count"] = nat_to_json(rec.class_count);
    json rows = json::array();
    for (const FiniteSet& r : rec.rows) rows.push_back(set_to_json(r));
    lj["rows"] = rows;
    levels.push_back(lj);
  }
  j["levels"] = levels;
  json head = json::array();
  for (const FiniteSet& v : t.v_head) head.push_back(set_to_json(v));
  j["v_head"] = head;
  json tail = json::array();
  for (const FiniteSet& v : t.v_tail) tail.push_back(set_to_json(v));
  j["v_tail"] = tail;
  json dec;
  dec["levels"] = t.decomposition.levels;
  dec["l_star"] = nat_to_json(t.decomposition.l_star);
  j["decomposition"] = dec;
  j["witness"] = spencer_to_obj(t.witness);
  j["audit_row_equivalence"] = t.audit_ok;
  j["verified"] = t.verified;
  return j.dump();
}

std::string outcome_to_json(const SearchOutcome& outcome) {
  json j;
  j["status"] = outcome.status == SearchStatus::Exact ? "exact" : "unknown";
  j["value"] = nat_to_json(outcome.value);
  if (outcome.lower_certificate) {
    j["lower_certificate"] = coloring_to_obj(*outcome.lower_certificate);
  }
  return j.dump();
}

}  // namespace hindman
