#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tsr/graph.hpp"

namespace tsr {

// Canonical k-independent set: sorted vertex ids.
using TokenConfig = VertexSet;

struct Slide {
    Vertex from;
    Vertex to;
    bool operator==(const Slide&) const = default;
};

struct MoveSeq {
    TokenConfig start;
    std::vector<Slide> slides;
};

inline constexpr std::size_t kDefaultBudget = 5'000'000;

enum class Connectivity { connected, disconnected, empty };

struct ConnVerdict {
    Connectivity kind = Connectivity::empty;
    // Two configurations in different components when disconnected.
    std::optional<std::pair<TokenConfig, TokenConfig>> witness;
    std::uint64_t total = 0;    // number of k-independent sets
    std::uint64_t reached = 0;  // size of the seed's component
};

std::uint64_t count_k_independent_sets(const Graph& g, std::size_t k);
// Visits k-independent sets in lexicographic order until f returns true.
void for_each_k_independent_set(const Graph& g, std::size_t k,
                                const std::function<bool(const TokenConfig&)>& f);

// Single-slide moves from c, sorted by resulting configuration.
std::vector<std::pair<Slide, TokenConfig>> slide_moves(const Graph& g, const TokenConfig& c);
std::vector<TokenConfig> successors(const Graph& g, const TokenConfig& c);
bool is_frozen(const Graph& g, const TokenConfig& c);

// Applies the slides of seq; returns the final configuration if every step is valid.
std::optional<TokenConfig> replay(const Graph& g, const MoveSeq& seq);

std::optional<MoveSeq> ts_reachable(const Graph& g, const TokenConfig& i, const TokenConfig& j,
                                    std::size_t budget = kDefaultBudget);
ConnVerdict ts_connected(const Graph& g, std::size_t k, std::size_t budget = kDefaultBudget);
std::size_t component_count(const Graph& g, std::size_t k, std::size_t budget = kDefaultBudget);
// All configurations reachable from start, in breadth-first order.
std::vector<TokenConfig> component_of(const Graph& g, const TokenConfig& start,
                                      std::size_t budget = kDefaultBudget);

}  // namespace tsr
