#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tsr/errors.hpp"
#include "tsr/harness.hpp"
#include "tsr/reductions.hpp"

using namespace tsr;
using namespace testing;

namespace {

// Edge set rebuilt from the five construction bullets, addressed by role names.
std::set<std::pair<std::string, std::string>> degree_conn_edges(const Graph& g, std::size_t k) {
    const std::size_t n = g.n(), nc = n + k + 1, nw = n + k + 2;
    auto c = [](std::size_t i) { return "c_" + std::to_string(i); };
    auto w = [](std::size_t i) { return "w_" + std::to_string(i); };
    auto x = [](std::size_t i) { return "x_" + std::to_string(i); };
    auto y = [](std::size_t i) { return "y_" + std::to_string(i); };
    std::set<std::pair<std::string, std::string>> e;
    auto add = [&](std::string a, std::string b) { e.insert(std::minmax(a, b)); };
    for (std::size_t i = 1; i <= nc; ++i)
        for (std::size_t j = i + 1; j <= nc; ++j) add(c(i), c(j));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (g.adjacent(Vertex(i - 1), Vertex(j - 1))) {
                add(c(i), w(j));
                add(c(j), w(i));
            }
    for (std::size_t i = 1; i <= nc; ++i) add(c(i), w(i));
    for (std::size_t i = 1; i <= n; ++i) add(c(i), w(nw));
    for (std::size_t i = 1; i <= nw; ++i) {
        add(x(i), y(i));
        for (std::size_t j = 1; j <= nc; ++j) add(x(i), c(j));
    }
    return e;
}

std::set<std::pair<std::string, std::string>> named_edges(const ReductionArtifact& a) {
    std::set<std::pair<std::string, std::string>> e;
    for (auto [u, v] : a.reduced.edges()) e.insert(std::minmax(a.labels[u].name, a.labels[v].name));
    return e;
}

PartitionedGraph pattern(std::size_t mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (Vertex a = 0; a < 2; ++a)
        for (Vertex b = 2; b < 4; ++b, ++bit)
            if (mask >> bit & 1) e.emplace_back(a, b);
    return PartitionedGraph{Graph(4, e), 2, 2, {{0, 1}, {2, 3}}};
}

std::size_t count_tag(const ReductionArtifact& a, const std::string& tag) {
    return std::size_t(std::count_if(a.labels.begin(), a.labels.end(), [&](const RoleLabel& l) { return l.tag == tag; }));
}

}  // namespace

TEST_CASE("tsconn-degree: sizes, target and witness") {
    Graph g = path(3);
    auto a = reduce_tsconn_degree(g, 2, false);
    CHECK(a.reduced.n() == 27);
    CHECK(a.reduced.n() == 4 * 3 + 4 * 2 + 7);
    CHECK(a.target_k == 3);
    const auto& ct = std::get<CliqueTree>(a.witness);
    CHECK(max_degree(ct) == 4);
    CHECK(ct.bags.size() == 3 * (3 + 2 + 2));
    CHECK(check_clique_tree(a.reduced, ct));
    CHECK(artifact_defects(a).empty());
    CHECK(named_edges(a) == degree_conn_edges(g, 2));
    CHECK(a.warnings.size() == 1);
}

TEST_CASE("tsconn-degree: edges match the construction on certified instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gen_nonblocking_instance(6, 2, seed);
        auto a = reduce_tsconn_degree(g, 2);
        CHECK(named_edges(a) == degree_conn_edges(g, 2));
        CHECK(a.warnings.empty());
        CHECK(artifact_defects(a).empty());
    }
}

TEST_CASE("tsconn-degree: errors") {
    CHECK_THROWS_AS(reduce_tsconn_degree(path(6), 1), ParameterError);
    CHECK_THROWS_AS(reduce_tsconn_degree(path(4), 2), PreconditionError);
    CHECK_THROWS_AS(reduce_tsconn_degree(Graph(1), 2), PreconditionError);
}

TEST_CASE("tsreach-degree: sizes, mapping and witness") {
    // Clique {0,1}, independent {2,3}; 0-2 and 1-3 cross edges.
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}});
    auto a = reduce_tsreach_degree(g, {2}, {3});
    CHECK(a.reduced.n() == 6);
    const auto& ct = std::get<CliqueTree>(a.witness);
    CHECK(max_degree(ct) <= 3);
    CHECK(check_clique_tree(a.reduced, ct));
    CHECK(artifact_defects(a).empty());
    CHECK(a.initial == TokenConfig{a.vertex("W", {1})});
    CHECK(a.final == TokenConfig{a.vertex("W", {2})});
    // d_i w_j mirrors c_i u_j; every s_j sees all of C'.
    CHECK(a.reduced.adjacent(a.vertex("Cprime", {1}), a.vertex("W", {1})));
    CHECK_FALSE(a.reduced.adjacent(a.vertex("Cprime", {1}), a.vertex("W", {2})));
    for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= 2; ++i) CHECK(a.reduced.adjacent(a.vertex("S", {j}), a.vertex("Cprime", {i})));
    auto same = reduce_tsreach_degree(g, {2}, {2});
    CHECK(same.initial == same.final);
}

TEST_CASE("tsreach-degree: errors") {
    CHECK_THROWS_AS(reduce_tsreach_degree(cycle(4), {0}, {1}), InvalidInput);
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}});
    CHECK_THROWS_AS(reduce_tsreach_degree(g, {0, 1}, {2, 3}), InvalidInput);
    CHECK_THROWS_AS(reduce_tsreach_degree(g, {2}, {2, 3}), InvalidInput);
}

TEST_CASE("tsconn-leafage: shape for k=2, n=2") {
    auto a = reduce_tsconn_leafage(pattern(1));
    CHECK(a.target_k == 4);
    CHECK(leaf_count(std::get<TreeModel>(a.witness)) == 5);
    CHECK(count_tag(a, "blue") + count_tag(a, "green") == 4 + 3);
    CHECK(count_tag(a, "orange") == 2);
    CHECK(count_tag(a, "pink") == 2);
    CHECK(count_tag(a, "H-type") == 2);
    CHECK(count_tag(a, "connector") == 4);
    CHECK_FALSE(a.initial);
    CHECK(artifact_defects(a).empty());
}

TEST_CASE("leafage witnesses for k in {2,3}, n in {2,3}") {
    for (std::size_t k : {2, 3})
        for (std::size_t n : {2, 3}) {
            auto is = gen_partitioned(k, n, 0.5, 17 * k + n, Variant::is);
            auto a = reduce_tsconn_leafage(is);
            CHECK(leaf_count(std::get<TreeModel>(a.witness)) == 2 * k + 1);
            CHECK(recognize_chordal(a.reduced));
            auto cl = gen_partitioned(k, n, 0.5, 31 * k + n, Variant::clique);
            auto b = reduce_tsreach_leafage(cl);
            CHECK(leaf_count(std::get<TreeModel>(b.witness)) == 3 * (k * (k - 1) / 2) + 2 * k + 2);
            CHECK(recognize_chordal(b.reduced));
            CHECK(b.initial->size() == n * k + k * (k - 1) / 2);
            CHECK(is_independent(b.reduced, *b.initial));
            CHECK(is_independent(b.reduced, *b.final));
        }
}

TEST_CASE("tsreach-leafage: shape for k=2, n=2") {
    auto a = reduce_tsreach_leafage(pattern(1));
    CHECK(a.target_k == 5);
    CHECK(a.initial->size() == 5);
    CHECK(a.final->size() == 5);
    CHECK(count_tag(a, "blue") == 8);
    CHECK(count_tag(a, "green") == 6);
    CHECK(count_tag(a, "red-H") == 1);
    CHECK(count_tag(a, "choke") == 1);
    CHECK(artifact_defects(a).empty());
}

TEST_CASE("leafage reductions: errors") {
    PartitionedGraph bad = pattern(0);
    bad.graph = Graph(4, {{0, 1}});
    CHECK_THROWS_AS(reduce_tsconn_leafage(bad), InvalidInput);
    CHECK_THROWS_AS(reduce_tsreach_leafage(pattern(0)), InvalidInput);
    PartitionedGraph short_class = pattern(1);
    short_class.classes[1].pop_back();
    CHECK_THROWS_AS(reduce_tsreach_leafage(short_class), InvalidInput);
}

TEST_CASE("artifacts are deterministic and carry unique labels") {
    auto a = reduce_tsreach_leafage(pattern(9));
    auto b = reduce_tsreach_leafage(pattern(9));
    CHECK(a == b);
    std::set<std::pair<std::string, std::vector<int>>> keys;
    std::set<std::string> names;
    for (const auto& l : a.labels) {
        keys.insert({l.tag, l.idx});
        names.insert(l.name);
    }
    CHECK(keys.size() == a.labels.size());
    CHECK(names.size() == a.labels.size());
    CHECK(a.provenance == source_digest(pattern(9)));
}

TEST_CASE("artifact_defects reports broken artifacts") {
    auto a = reduce_tsconn_degree(gen_nonblocking_instance(6, 2, 1), 2);
    auto broken = a;
    broken.labels.pop_back();
    CHECK_FALSE(artifact_defects(broken).empty());
    broken = a;
    std::get<CliqueTree>(broken.witness).edges.pop_back();
    CHECK_FALSE(artifact_defects(broken).empty());
    broken = a;
    broken.initial = TokenConfig{0, 1};
    CHECK_FALSE(artifact_defects(broken).empty());
}
