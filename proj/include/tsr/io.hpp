#pragma once

#include <string>

#include <json.hpp>

#include "tsr/chordal.hpp"
#include "tsr/engine.hpp"
#include "tsr/oracles.hpp"
#include "tsr/reductions.hpp"

namespace tsr {

using json = nlohmann::json;

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const PartitionedGraph& pg);
PartitionedGraph partitioned_from_json(const json& j);

json to_json(const TreeModel& m);
TreeModel tree_model_from_json(const json& j);

json to_json(const CliqueTree& ct);
CliqueTree clique_tree_from_json(const json& j);

json config_to_json(const TokenConfig& c);
TokenConfig config_from_json(const json& j);

json to_json(const MoveSeq& seq);

json to_json(const ReductionArtifact& a);
ReductionArtifact artifact_from_json(const json& j);

// Source instances carry a "kind" field: degree-conn, degree-reach or partitioned.
json source_to_json(const SourceInstance& s);
SourceInstance source_from_json(const json& j);

// Canonical text used for hashing and files: two-space indented JSON.
std::string canonical(const json& j);
// Hex SHA-256 of canonical(source_to_json(s)).
std::string source_digest(const SourceInstance& s);
std::string sha256_hex(const std::string& text);

// DOT renderings.
std::string ts_graph_dot(const Graph& g, std::size_t k, std::size_t budget = kDefaultBudget);
std::string clique_tree_dot(const CliqueTree& ct, const std::vector<RoleLabel>* labels = nullptr);
std::string host_tree_dot(const TreeModel& m, const std::vector<RoleLabel>* labels = nullptr);

}  // namespace tsr
