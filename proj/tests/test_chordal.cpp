#include <doctest.h>

#include "support.hpp"
#include "tsr/chordal.hpp"
#include "tsr/errors.hpp"
#include "tsr/harness.hpp"

using namespace tsr;
using namespace testing;

namespace {

TreeModel model(std::size_t nodes, std::vector<std::pair<HostNode, HostNode>> edges,
                std::vector<std::vector<HostNode>> models) {
    return TreeModel{HostTree{nodes, std::move(edges), {}}, std::move(models)};
}

// Brute-force: v's later neighbours form a clique for every v.
bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!g.adjacent(s[a], s[b])) return false;
    return true;
}

// Brute-force chordality: no induced cycle of length >= 4, by checking every vertex subset.
bool chordal_oracle(const Graph& g) {
    const std::size_t n = g.n();
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        auto s = mask_set(m);
        if (s.size() < 4) continue;
        bool cycle = true;
        for (Vertex v : s) {
            int d = 0;
            for (Vertex x : s) d += g.adjacent(v, x);
            if (d != 2) cycle = false;
        }
        if (!cycle) continue;
        // An induced 2-regular subgraph is a cycle when it is connected.
        std::vector<Vertex> stack{s[0]}, seen{s[0]};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex x : s)
                if (g.adjacent(v, x) && std::find(seen.begin(), seen.end(), x) == seen.end()) {
                    seen.push_back(x);
                    stack.push_back(x);
                }
        }
        if (seen.size() == s.size()) return false;
    }
    return true;
}

std::vector<VertexSet> maximal_cliques_oracle(const Graph& g) {
    std::vector<VertexSet> out;
    const std::size_t n = g.n();
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        auto s = mask_set(m);
        if (!is_clique(g, s)) continue;
        bool maximal = true;
        for (Vertex v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1)) {
                auto t = s;
                t.push_back(v);
                if (is_clique(g, normalized(t))) maximal = false;
            }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TreeModel random_model(std::mt19937_64& rng) {
    std::size_t nodes = 1 + rng() % 8, verts = 1 + rng() % 7;
    TreeModel m;
    m.host.nodes = nodes;
    for (HostNode x = 1; x < nodes; ++x) m.host.edges.emplace_back(HostNode(rng() % x), x);
    std::vector<std::vector<HostNode>> adj(nodes);
    for (auto [a, b] : m.host.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t v = 0; v < verts; ++v) {
        // Grow a connected subtree from a random root.
        std::vector<HostNode> sub{HostNode(rng() % nodes)};
        std::size_t target = 1 + rng() % nodes;
        for (std::size_t step = 0; step < 4 * nodes && sub.size() < target; ++step) {
            HostNode from = sub[rng() % sub.size()];
            if (adj[from].empty()) break;
            HostNode to = adj[from][rng() % adj[from].size()];
            if (std::find(sub.begin(), sub.end(), to) == sub.end()) sub.push_back(to);
        }
        m.models.push_back(normalized(sub));
    }
    for (auto& e : m.host.edges) e = {std::min(e.first, e.second), std::max(e.first, e.second)};
    return m;
}

}  // namespace

TEST_CASE("realize examples") {
    CHECK(realize(model(1, {}, {{0}, {0}})) == complete(2));
    CHECK(realize(model(3, {{0, 1}, {1, 2}}, {{0}, {2}})) == Graph(2));
    // Star host: centre 0, leaves 1, 2, 3.
    CHECK(realize(model(4, {{0, 1}, {0, 2}, {0, 3}}, {{0, 1}, {0, 2}, {0, 3}})) == complete(3));
}

TEST_CASE("realize rejects bad models") {
    try {
        realize(model(3, {{0, 1}, {1, 2}}, {{0}, {0, 2}}));
        FAIL("expected InvalidModel");
    } catch (const InvalidModel& e) {
        CHECK(e.vertex() == 1);
    }
    CHECK_THROWS_AS(realize(model(3, {{0, 1}}, {{0}})), InvalidInput);
    CHECK_THROWS_AS(realize(model(3, {{0, 1}, {1, 2}, {0, 2}}, {{0}})), InvalidInput);
    CHECK_THROWS_AS(realize(model(2, {{0, 1}}, {{}})), InvalidModel);
}

TEST_CASE("recognize_chordal examples") {
    CHECK_FALSE(recognize_chordal(cycle(4)));
    CHECK(recognize_chordal(path(6)));
    CHECK(recognize_chordal(star(4)));
    Graph k3p(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto order = recognize_chordal(k3p);
    REQUIRE(order);
    CHECK(is_perfect_elimination_order(k3p, *order));
}

TEST_CASE("maximal_cliques examples") {
    Graph p3 = path(3);
    CHECK(maximal_cliques(p3, *recognize_chordal(p3)) == std::vector<VertexSet>{{0, 1}, {1, 2}});
    Graph k4 = complete(4);
    CHECK(maximal_cliques(k4, *recognize_chordal(k4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    CHECK_THROWS_AS(maximal_cliques(cycle(4), {0, 1, 2, 3}), InvalidInput);
}

TEST_CASE("maximal cliques of a degree reduction are the witness bags") {
    Graph g = gen_nonblocking_instance(6, 2, 5);
    auto a = reduce_tsconn_degree(g, 2);
    auto cliques = maximal_cliques(a.reduced, *recognize_chordal(a.reduced));
    auto bags = std::get<CliqueTree>(a.witness).bags;
    std::sort(bags.begin(), bags.end());
    CHECK(cliques == bags);
}

TEST_CASE("build_clique_tree examples") {
    auto p3 = build_clique_tree(path(3));
    CHECK(p3.bags.size() == 2);
    CHECK(p3.edges.size() == 1);
    auto s = build_clique_tree(star(3));
    CHECK(s.bags.size() == 3);
    CHECK(check_clique_tree(star(3), s));
    auto k4 = build_clique_tree(complete(4));
    CHECK(k4.bags.size() == 1);
    CHECK(k4.edges.empty());
    CHECK_THROWS_AS(build_clique_tree(cycle(5)), NotChordal);
}

TEST_CASE("check_clique_tree examples") {
    Graph p3 = path(3);
    CHECK(check_clique_tree(p3, CliqueTree{{{0, 1}, {1, 2}}, {{0, 1}}}));
    CHECK_FALSE(check_clique_tree(p3, CliqueTree{{{0, 1}, {0, 2}}, {{0, 1}}}));
    CHECK_FALSE(check_clique_tree(p3, CliqueTree{{{0, 1}, {1, 2}}, {}}));
    // Three bags sharing a vertex: a path whose middle bag lacks it breaks the intersection property.
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    CHECK_FALSE(check_clique_tree(g, CliqueTree{{{0, 1}, {3, 4}, {0, 2}, {0, 3}}, {{0, 1}, {1, 2}, {2, 3}}}));
    CHECK(check_clique_tree(g, CliqueTree{{{0, 1}, {3, 4}, {0, 2}, {0, 3}}, {{0, 3}, {1, 3}, {2, 3}}}));
}

TEST_CASE("max_degree and leaf_count") {
    CHECK(max_degree(CliqueTree{{{0}}, {}}) == 0);
    CHECK(max_degree(CliqueTree{{{0, 1}, {1, 2}, {1, 3}, {1, 4}}, {{0, 1}, {0, 2}, {0, 3}}}) == 3);
    CHECK(leaf_count(model(4, {{0, 1}, {1, 2}, {2, 3}}, {{0}})) == 2);
    CHECK(leaf_count(model(1, {}, {{0}})) == 1);
    CHECK(leaf_count(model(4, {{0, 1}, {0, 2}, {0, 3}}, {{0}})) == 3);
}

TEST_CASE("chordal properties under random model fuzzing") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 400; ++t) {
        TreeModel m = random_model(rng);
        Graph g = realize(m);
        auto order = recognize_chordal(g);
        REQUIRE(order);
        CHECK(is_perfect_elimination_order(g, *order));
        auto cliques = maximal_cliques(g, *order);
        CHECK(cliques.size() <= g.n());
        auto sorted = cliques;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == maximal_cliques_oracle(g));
        CHECK(check_clique_tree(g, build_clique_tree(g)));
    }
}

TEST_CASE("recognize_chordal agrees with the induced-cycle oracle") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 400; ++t) {
        Graph g = random_graph(1 + rng() % 7, 0.45, rng);
        CHECK(recognize_chordal(g).has_value() == chordal_oracle(g));
    }
}
