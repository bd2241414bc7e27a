#include "tsr/graph.hpp"

#include <algorithm>
#include <string>

#include "tsr/errors.hpp"

namespace tsr {

Graph::Graph(std::size_t n) : Graph(n, {}) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges)
    : adj_(n), words_((n + 63) / 64) {
    rows_.assign(n * words_, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidInput("edge endpoint out of range: (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v)) continue;
        rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void validate_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.n())
            throw InvalidInput("vertex id " + std::to_string(s[i]) + " out of range (n=" +
                               std::to_string(g.n()) + ")");
        if (i > 0 && s[i - 1] >= s[i]) throw InvalidInput("vertex set not sorted/unique");
    }
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    validate_set(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    validate_set(g, d);
    std::vector<char> hit(g.n(), 0);
    for (Vertex v : d) {
        hit[v] = 1;
        for (Vertex x : g.neighbors(v)) hit[x] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace {

bool in_closed_nbhd(const Graph& g, Vertex t, Vertex x) { return t == x || g.adjacent(t, x); }

bool has_private(const Graph& g, const VertexSet& s, Vertex v) {
    for (Vertex x : g.neighbors(v)) {
        bool priv = true;
        for (Vertex t : s)
            if (t != v && in_closed_nbhd(g, t, x)) {
                priv = false;
                break;
            }
        if (priv) return true;
    }
    return false;
}

}  // namespace

VertexSet private_neighbours(const Graph& g, const VertexSet& s, Vertex v) {
    validate_set(g, s);
    if (!std::binary_search(s.begin(), s.end(), v))
        throw InvalidInput("vertex " + std::to_string(v) + " is not a member of the set");
    VertexSet out;
    for (Vertex x : g.neighbors(v)) {
        bool priv = true;
        for (Vertex t : s)
            if (t != v && in_closed_nbhd(g, t, x)) {
                priv = false;
                break;
            }
        if (priv) out.push_back(x);
    }
    return out;
}

bool is_blocking(const Graph& g, const VertexSet& s) {
    validate_set(g, s);
    for (Vertex v : s)
        if (has_private(g, s, v)) return false;
    return true;
}

std::optional<VertexSet> smallest_blocking_set_upto(const Graph& g, std::size_t m) {
    if (m > g.n()) throw InvalidInput("blocking-set bound exceeds vertex count");
    std::optional<VertexSet> found;
    for (std::size_t r = 1; r <= m && !found; ++r) {
        for_each_subset(g.n(), r, [&](const VertexSet& s) {
            for (Vertex v : s)
                if (has_private(g, s, v)) return false;
            found = s;
            return true;
        });
    }
    return found;
}

}  // namespace tsr
