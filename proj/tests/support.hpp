#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tsr/graph.hpp"

namespace testing {

using tsr::Edge;
using tsr::Graph;
using tsr::Vertex;
using tsr::VertexSet;

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, Vertex(n - 1));
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

// Centre 0, leaves 1..leaves.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (double(rng() >> 11) * 0x1.0p-53 < p) e.emplace_back(u, v);
    return Graph(n, e);
}

// Subsets of {0..n-1} given as bitmasks; used by the oracles below.
inline bool mask_independent(const Graph& g, std::uint32_t m) {
    for (Vertex u = 0; u < g.n(); ++u)
        if (m >> u & 1)
            for (Vertex v = u + 1; v < g.n(); ++v)
                if ((m >> v & 1) && g.adjacent(u, v)) return false;
    return true;
}

inline VertexSet mask_set(std::uint32_t m) {
    VertexSet s;
    for (Vertex v = 0; v < 32; ++v)
        if (m >> v & 1) s.push_back(v);
    return s;
}

// Materialized TS_k(G): every independent k-subset and every slide edge, components by union-find.
struct NaiveTS {
    std::vector<std::uint32_t> states;
    std::vector<std::size_t> parent;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    NaiveTS(const Graph& g, std::size_t k) {
        for (std::uint32_t m = 0; m < (1u << g.n()); ++m)
            if (std::size_t(__builtin_popcount(m)) == k && mask_independent(g, m)) states.push_back(m);
        parent.resize(states.size());
        std::iota(parent.begin(), parent.end(), 0);
        for (std::size_t a = 0; a < states.size(); ++a)
            for (std::size_t b = a + 1; b < states.size(); ++b) {
                std::uint32_t diff = states[a] ^ states[b];
                if (__builtin_popcount(diff) != 2) continue;
                Vertex x = Vertex(__builtin_ctz(states[a] & diff)), y = Vertex(__builtin_ctz(states[b] & diff));
                if (!g.adjacent(x, y)) continue;
                edges.emplace_back(a, b);
                parent[find(a)] = find(b);
            }
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    std::size_t index(const VertexSet& s) const {
        std::uint32_t m = 0;
        for (Vertex v : s) m |= 1u << v;
        return std::size_t(std::lower_bound(states.begin(), states.end(), m) - states.begin());
    }
    std::size_t components() {
        std::size_t c = 0;
        for (std::size_t x = 0; x < states.size(); ++x) c += find(x) == x;
        return c;
    }
    bool connected() { return components() <= 1; }
    bool same(const VertexSet& a, const VertexSet& b) { return find(index(a)) == find(index(b)); }
};

}  // namespace testing
