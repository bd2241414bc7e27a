#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsr/chordal.hpp"
#include "tsr/engine.hpp"
#include "tsr/graph.hpp"
#include "tsr/oracles.hpp"

namespace tsr {

// tag is one of: C, W, X, Y, Cprime, S, blue, green, purple-bstar, orange, u, w,
// connector, pink, H-type, red-H, I-index, J-index, K-index, choke, cij-connector.
// idx holds the 1-based family indices; name is a readable unique handle.
struct RoleLabel {
    std::string tag;
    std::vector<int> idx;
    std::string name;

    bool operator==(const RoleLabel&) const = default;
};

using Witness = std::variant<CliqueTree, TreeModel>;

struct ReductionArtifact {
    std::string which;
    Graph reduced;
    std::vector<RoleLabel> labels;
    Witness witness;
    std::size_t target_k = 0;
    std::optional<TokenConfig> initial;
    std::optional<TokenConfig> final;
    std::string provenance;
    std::vector<std::string> warnings;

    bool operator==(const ReductionArtifact&) const = default;
    // Vertex carrying the given role; throws std::out_of_range if absent.
    Vertex vertex(const std::string& tag, const std::vector<int>& idx) const;
    std::optional<Vertex> find(const std::string& tag, const std::vector<int>& idx) const;
};

struct DegreeConnSource {
    Graph graph;
    std::size_t k = 0;
    bool operator==(const DegreeConnSource&) const = default;
};

struct DegreeReachSource {
    Graph graph;
    TokenConfig initial;
    TokenConfig target;
    bool operator==(const DegreeReachSource&) const = default;
};

using SourceInstance = std::variant<DegreeConnSource, DegreeReachSource, PartitionedGraph>;

// Above this many candidate subsets the blocking-set precondition is trusted, not checked.
inline constexpr std::uint64_t kBlockingCheckLimit = 2'000'000;

// check_blocking=false trusts the caller's promise and records a warning instead.
ReductionArtifact reduce_tsconn_degree(const Graph& g, std::size_t k, bool check_blocking = true);
ReductionArtifact reduce_tsreach_degree(const Graph& g, const TokenConfig& i0, const TokenConfig& j0);
ReductionArtifact reduce_tsconn_leafage(const PartitionedGraph& pg);
ReductionArtifact reduce_tsreach_leafage(const PartitionedGraph& pg);

// Structural invariants shared by every artifact: chordal reduced graph, valid witness,
// one label per vertex, independent initial/final configurations of size target_k.
std::vector<std::string> artifact_defects(const ReductionArtifact& a);

}  // namespace tsr
