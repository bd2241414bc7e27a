#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tsr {

using Vertex = std::uint32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t n() const { return adj_.size(); }
    std::size_t m() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const {
        return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    // Sorted list of edges (u, v) with u < v.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> rows_;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
};

// Throws InvalidInput unless s is sorted, duplicate-free and within range.
void validate_set(const Graph& g, const VertexSet& s);
VertexSet normalized(VertexSet s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& d);
VertexSet private_neighbours(const Graph& g, const VertexSet& s, Vertex v);
bool is_blocking(const Graph& g, const VertexSet& s);
std::optional<VertexSet> smallest_blocking_set_upto(const Graph& g, std::size_t m);

// Calls f(subset) for every size-r subset of 0..n-1 in lexicographic order
// until f returns true; returns whether it stopped early.
template <class F>
bool for_each_subset(std::size_t n, std::size_t r, F&& f) {
    if (r > n) return false;
    VertexSet s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = static_cast<Vertex>(i);
    while (true) {
        if (f(static_cast<const VertexSet&>(s))) return true;
        std::size_t i = r;
        while (i > 0 && s[i - 1] == n - r + i - 1) --i;
        if (i == 0) return false;
        ++s[i - 1];
        for (std::size_t j = i; j < r; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace tsr
