#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsr/graph.hpp"

namespace tsr {

using HostNode = std::uint32_t;

struct HostTree {
    std::size_t nodes = 0;
    std::vector<std::pair<HostNode, HostNode>> edges;
    // Either empty or one entry per node; empty strings mean unlabeled.
    std::vector<std::string> labels;

    bool operator==(const HostTree&) const = default;
};

struct TreeModel {
    HostTree host;
    // models[v] is the sorted node set of graph vertex v.
    std::vector<std::vector<HostNode>> models;

    bool operator==(const TreeModel&) const = default;
};

struct CliqueTree {
    std::vector<VertexSet> bags;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool operator==(const CliqueTree&) const = default;
};

// order[i] is the i-th vertex eliminated.
using EliminationOrder = std::vector<Vertex>;

// Throws InvalidInput unless host is a tree, InvalidModel for a bad model.
void validate_model(const TreeModel& model);
Graph realize(const TreeModel& model);

std::optional<EliminationOrder> recognize_chordal(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order);
std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& order);
CliqueTree build_clique_tree(const Graph& g);
bool check_clique_tree(const Graph& g, const CliqueTree& ct);
std::size_t max_degree(const CliqueTree& ct);
std::size_t leaf_count(const TreeModel& model);

}  // namespace tsr
