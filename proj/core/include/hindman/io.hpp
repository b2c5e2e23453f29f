#pragma once

#include <string>
#include <variant>

#include "hindman/bounds.hpp"
#include "hindman/core.hpp"
#include "hindman/replay.hpp"
#include "hindman/search.hpp"
#include "hindman/witness.hpp"

namespace hindman {

// JSON formats for the CLI surface. Emission is deterministic (sorted keys);
// values above the 53-bit safe-integer range are written as decimal strings
// so certificates stay auditable by independent tooling. Parse or validation
// failures raise InputError.

std::string coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const std::string& text);

using WitnessFile = std::variant<SpencerWitness, UnionWitness>;

std::string witness_to_json(const SpencerWitness& w);
std::string witness_to_json(const UnionWitness& w);
WitnessFile witness_from_json(const std::string& text);

std::string certificate_to_json(const BadColoringCertificate& cert);
BadColoringCertificate certificate_from_json(const std::string& text);

// {"u":[[n,c,value],...],"hind":[[n,c,value],...]}; both keys optional.
void load_oracle_table(const std::string& text, OracleTable& table);

std::string transcript_to_json(const ReplayTranscript& transcript);

// Outcome snapshot used for byte-level determinism checks and tooling.
std::string outcome_to_json(const SearchOutcome& outcome);

}  // namespace hindman
