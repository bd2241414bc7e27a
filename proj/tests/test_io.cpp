#include <doctest.h>

#include "support.hpp"
#include "tsr/errors.hpp"
#include "tsr/harness.hpp"
#include "tsr/io.hpp"

using namespace tsr;
using namespace testing;

TEST_CASE("graph and partition round trips") {
    Graph g = cycle(5);
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK(canonical(to_json(graph_from_json(to_json(g)))) == canonical(to_json(g)));
    auto pg = gen_partitioned(3, 2, 0.5, 4, Variant::is);
    CHECK(partitioned_from_json(to_json(pg)) == pg);
    CHECK(config_from_json(config_to_json({1, 4, 7})) == TokenConfig{1, 4, 7});
}

TEST_CASE("witness round trips") {
    auto ct = build_clique_tree(path(5));
    CHECK(clique_tree_from_json(to_json(ct)) == ct);
    auto a = reduce_tsconn_leafage(gen_partitioned(2, 2, 0.5, 1, Variant::is));
    const auto& m = std::get<TreeModel>(a.witness);
    CHECK(tree_model_from_json(to_json(m)) == m);
}

TEST_CASE("artifacts round trip byte for byte") {
    std::vector<ReductionArtifact> arts{
        reduce_tsconn_degree(gen_nonblocking_instance(6, 2, 2), 2),
        reduce_tsreach_degree(Graph(4, {{0, 1}, {0, 2}, {1, 3}}), {2}, {3}),
        reduce_tsconn_leafage(gen_partitioned(2, 2, 0.5, 3, Variant::is)),
        reduce_tsreach_leafage(gen_partitioned(2, 2, 0.5, 3, Variant::clique)),
    };
    for (const auto& a : arts) {
        auto text = canonical(to_json(a));
        auto back = artifact_from_json(json::parse(text));
        CHECK(back == a);
        CHECK(canonical(to_json(back)) == text);
    }
}

TEST_CASE("source round trips and digests") {
    std::vector<SourceInstance> srcs{
        DegreeConnSource{path(4), 2},
        DegreeReachSource{path(3), {0}, {2}},
        gen_partitioned(2, 3, 0.5, 8, Variant::clique),
    };
    for (const auto& s : srcs) {
        CHECK(source_from_json(source_to_json(s)) == s);
        CHECK(source_digest(s) == source_digest(source_from_json(json::parse(canonical(source_to_json(s))))));
        CHECK(source_digest(s).size() == 64);
    }
    CHECK(source_digest(srcs[0]) != source_digest(DegreeConnSource{path(4), 3}));
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("malformed input is rejected as InvalidInput") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 2]]})")), InvalidInput);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), InvalidInput);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": "x", "edges": []})")), InvalidInput);
    CHECK_THROWS_AS(source_from_json(json::parse(R"({"kind": "nope"})")), InvalidInput);
}

TEST_CASE("DOT renderings") {
    auto dot = ts_graph_dot(path(4), 1);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("--") != std::string::npos);
    auto a = reduce_tsconn_degree(gen_nonblocking_instance(6, 2, 0), 2);
    auto ct = clique_tree_dot(std::get<CliqueTree>(a.witness), &a.labels);
    CHECK(ct.find("c_1") != std::string::npos);
    auto b = reduce_tsconn_leafage(gen_partitioned(2, 2, 0.5, 0, Variant::is));
    auto host = host_tree_dot(std::get<TreeModel>(b.witness), &b.labels);
    CHECK(host.rfind("graph", 0) == 0);
    CHECK(host.back() == '\n');
}
