#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "radiole/classifier.hpp"
#include "radiole/config.hpp"
#include "radiole/drip.hpp"
#include "radiole/election.hpp"
#include "radiole/simulator.hpp"

namespace radiole {

// Structured documents for every result type, with parsers so that everything
// the tool emits can be read back. All containers serialize in a fixed order,
// so identical inputs produce byte-identical documents.
//
// History entries encode as: null (silence), {"msg": payload} (message),
// "*" (noise). Labels encode as [cls, block_round, "1" | "*"] triples.

nlohmann::json entry_to_json(const HistoryEntry& e);
HistoryEntry entry_from_json(const nlohmann::json& j);

nlohmann::json label_to_json(const Label& label);
Label label_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const PartitionTrace& trace);
PartitionTrace trace_from_json(const nlohmann::json& j);

nlohmann::json protocol_to_json(const CanonicalProtocol& protocol);
CanonicalProtocol protocol_from_json(const nlohmann::json& j);

nlohmann::json execution_to_json(const ExecutionTrace& trace);
ExecutionTrace execution_from_json(const nlohmann::json& j);

nlohmann::json election_to_json(const ElectionResult& result);
ElectionResult election_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CrossCheckReport& report);
CrossCheckReport report_from_json(const nlohmann::json& j);

// One graph block per global round with transmitting nodes filled, sleeping
// nodes dotted and terminated nodes dashed; meant for piping into graphviz.
std::string execution_to_dot(const ExecutionTrace& trace, const Configuration& c);

}  // namespace radiole
