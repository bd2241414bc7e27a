#include "tsr/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::vector<std::vector<HostNode>> host_adjacency(const HostTree& h) {
    std::vector<std::vector<HostNode>> adj(h.nodes);
    for (auto [a, b] : h.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

void validate_model(const TreeModel& model) {
    const HostTree& h = model.host;
    if (!h.labels.empty() && h.labels.size() != h.nodes)
        throw InvalidInput("host label count does not match node count");
    if (h.nodes == 0) {
        if (!h.edges.empty() || !model.models.empty())
            throw InvalidInput("empty host tree cannot carry edges or models");
        return;
    }
    if (h.edges.size() != h.nodes - 1) throw InvalidInput("host is not a tree: wrong edge count");
    DisjointSets ds(h.nodes);
    for (auto [a, b] : h.edges) {
        if (a >= h.nodes || b >= h.nodes) throw InvalidInput("host edge endpoint out of range");
        if (!ds.unite(a, b)) throw InvalidInput("host is not a tree: cycle");
    }
    auto adj = host_adjacency(h);
    std::vector<int> mark(h.nodes, -1);
    for (std::size_t v = 0; v < model.models.size(); ++v) {
        const auto& m = model.models[v];
        if (m.empty()) throw InvalidModel("empty model for vertex " + std::to_string(v), v);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] >= h.nodes)
                throw InvalidModel("model of vertex " + std::to_string(v) + " has node out of range", v);
            if (i > 0 && m[i - 1] >= m[i])
                throw InvalidModel("model of vertex " + std::to_string(v) + " not sorted/unique", v);
            mark[m[i]] = static_cast<int>(v);
        }
        std::vector<HostNode> stack{m[0]};
        std::size_t seen = 0;
        std::vector<char> vis(h.nodes, 0);
        vis[m[0]] = 1;
        while (!stack.empty()) {
            HostNode x = stack.back();
            stack.pop_back();
            ++seen;
            for (HostNode y : adj[x])
                if (!vis[y] && mark[y] == static_cast<int>(v)) {
                    vis[y] = 1;
                    stack.push_back(y);
                }
        }
        if (seen != m.size())
            throw InvalidModel("model of vertex " + std::to_string(v) + " is not connected", v);
    }
}

Graph realize(const TreeModel& model) {
    validate_model(model);
    std::vector<std::vector<Vertex>> at(model.host.nodes);
    for (std::size_t v = 0; v < model.models.size(); ++v)
        for (HostNode x : model.models[v]) at[x].push_back(static_cast<Vertex>(v));
    std::vector<Edge> edges;
    for (const auto& list : at)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) edges.emplace_back(list[i], list[j]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(model.models.size(), edges);
}

std::optional<EliminationOrder> recognize_chordal(const Graph& g) {
    // Maximum cardinality search; the reverse visiting order is a PEO iff g is chordal.
    const std::size_t n = g.n();
    std::vector<std::size_t> weight(n, 0);
    std::vector<char> done(n, 0);
    EliminationOrder order(n);
    for (std::size_t step = n; step-- > 0;) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!done[v] && (best == n || weight[v] > weight[best])) best = v;
        done[best] = 1;
        order[step] = static_cast<Vertex>(best);
        for (Vertex x : g.neighbors(static_cast<Vertex>(best)))
            if (!done[x]) ++weight[x];
    }
    if (!is_perfect_elimination_order(g, order)) return std::nullopt;
    return order;
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order) {
    const std::size_t n = g.n();
    if (order.size() != n) return false;
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || pos[order[i]] != n) return false;
        pos[order[i]] = i;
    }
    for (Vertex v : order) {
        Vertex parent = v;
        for (Vertex x : g.neighbors(v))
            if (pos[x] > pos[v] && (parent == v || pos[x] < pos[parent])) parent = x;
        if (parent == v) continue;
        for (Vertex x : g.neighbors(v))
            if (pos[x] > pos[v] && x != parent && !g.adjacent(parent, x)) return false;
    }
    return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& order) {
    if (!is_perfect_elimination_order(g, order))
        throw InvalidInput("order is not a perfect elimination order");
    const std::size_t n = g.n();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<VertexSet> later(n);
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) {
        parent[v] = v;
        for (Vertex x : g.neighbors(v))
            if (pos[x] > pos[v]) {
                later[v].push_back(x);
                if (parent[v] == v || pos[x] < pos[parent[v]]) parent[v] = x;
            }
    }
    // K_v = {v} + later(v) is non-maximal iff some child u has |later(u)| = |later(v)| + 1.
    std::vector<char> dominated(n, 0);
    for (Vertex u = 0; u < n; ++u)
        if (parent[u] != u && later[u].size() == later[parent[u]].size() + 1) dominated[parent[u]] = 1;
    std::vector<VertexSet> out;
    for (Vertex v = 0; v < n; ++v) {
        if (dominated[v]) continue;
        VertexSet k = later[v];
        k.push_back(v);
        out.push_back(normalized(std::move(k)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueTree build_clique_tree(const Graph& g) {
    auto order = recognize_chordal(g);
    if (!order) throw NotChordal("graph is not chordal");
    CliqueTree ct;
    ct.bags = maximal_cliques(g, *order);
    const std::size_t m = ct.bags.size();
    struct Cand {
        std::size_t w, a, b;
    };
    std::vector<Cand> cands;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            VertexSet common;
            std::set_intersection(ct.bags[a].begin(), ct.bags[a].end(), ct.bags[b].begin(),
                                  ct.bags[b].end(), std::back_inserter(common));
            cands.push_back({common.size(), a, b});
        }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.w > y.w; });
    DisjointSets ds(m);
    for (const auto& c : cands)
        if (ds.unite(c.a, c.b)) ct.edges.emplace_back(c.a, c.b);
    std::sort(ct.edges.begin(), ct.edges.end());
    return ct;
}

bool check_clique_tree(const Graph& g, const CliqueTree& ct) {
    auto order = recognize_chordal(g);
    if (!order) return false;
    auto expected = maximal_cliques(g, *order);
    std::vector<VertexSet> got;
    for (const auto& b : ct.bags) {
        if (normalized(b) != b) return false;
        got.push_back(b);
    }
    std::sort(got.begin(), got.end());
    if (got != expected) return false;
    const std::size_t m = ct.bags.size();
    if (ct.edges.size() != (m == 0 ? 0 : m - 1)) return false;
    DisjointSets ds(m);
    for (auto [a, b] : ct.edges)
        if (a >= m || b >= m || !ds.unite(a, b)) return false;
    // In a tree, the bags holding v are connected iff they span exactly count-1 edges.
    std::vector<std::size_t> bag_count(g.n(), 0), edge_count(g.n(), 0);
    for (const auto& b : ct.bags)
        for (Vertex v : b) ++bag_count[v];
    for (auto [a, b] : ct.edges) {
        VertexSet common;
        std::set_intersection(ct.bags[a].begin(), ct.bags[a].end(), ct.bags[b].begin(),
                              ct.bags[b].end(), std::back_inserter(common));
        for (Vertex v : common) ++edge_count[v];
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (bag_count[v] == 0 || edge_count[v] + 1 != bag_count[v]) return false;
    return true;
}

std::size_t max_degree(const CliqueTree& ct) {
    std::vector<std::size_t> deg(ct.bags.size(), 0);
    for (auto [a, b] : ct.edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::size_t leaf_count(const TreeModel& model) {
    const HostTree& h = model.host;
    if (h.nodes <= 1) return h.nodes;
    std::vector<std::size_t> deg(h.nodes, 0);
    for (auto [a, b] : h.edges) {
        ++deg[a];
        ++deg[b];
    }
    return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), std::size_t{1}));
}

}  // namespace tsr
