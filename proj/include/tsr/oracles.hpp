#pragma once

#include <optional>
#include <vector>

#include "tsr/graph.hpp"

namespace tsr {

struct PartitionedGraph {
    Graph graph;
    std::size_t k = 0;           // number of classes
    std::size_t class_size = 0;  // vertices per class
    std::vector<VertexSet> classes;

    bool operator==(const PartitionedGraph&) const = default;
};

struct SplitWitness {
    VertexSet clique;
    VertexSet independent;
};

// Throws InvalidInput unless the classes partition V into k sorted classes of class_size.
void validate_partition(const PartitionedGraph& pg, bool classes_independent);
// Partition check plus: every class has at least one incident cross edge.
void validate_clique_instance(const PartitionedGraph& pg);

std::optional<VertexSet> min_dominating_set(const Graph& g, std::size_t bound);
std::optional<VertexSet> multicolored_independent_set(const PartitionedGraph& pg);
std::optional<VertexSet> multicolored_clique(const PartitionedGraph& pg);
std::optional<SplitWitness> split_partition(const Graph& g);

}  // namespace tsr
