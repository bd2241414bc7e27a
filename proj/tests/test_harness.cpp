#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "support.hpp"
#include "tsr/errors.hpp"
#include "tsr/harness.hpp"

using namespace tsr;
using namespace testing;

namespace {

PartitionedGraph pattern(std::size_t mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (Vertex a = 0; a < 2; ++a)
        for (Vertex b = 2; b < 4; ++b, ++bit)
            if (mask >> bit & 1) e.emplace_back(a, b);
    return PartitionedGraph{Graph(4, e), 2, 2, {{0, 1}, {2, 3}}};
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(TSR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "tsr_harness_test";
    std::filesystem::create_directories(dir);
    return dir;
}

void write(const std::filesystem::path& p, const json& j) { std::ofstream(p) << canonical(j); }

}  // namespace

TEST_CASE("gen_nonblocking_instance") {
    Graph a = gen_nonblocking_instance(6, 2, 42);
    CHECK(canonical(to_json(a)) == canonical(to_json(gen_nonblocking_instance(6, 2, 42))));
    CHECK_FALSE(smallest_blocking_set_upto(a, 3));
    CHECK_THROWS_AS(gen_nonblocking_instance(1, 2, 0), GenerationFailure);
    CHECK_THROWS_AS(gen_nonblocking_instance(6, 1, 0), ParameterError);
}

TEST_CASE("gen_partitioned") {
    auto one = gen_partitioned(2, 1, 1.0, 0, Variant::is);
    CHECK(one.graph.edges() == std::vector<Edge>{{0, 1}});
    CHECK(gen_partitioned(3, 3, 0.3, 9, Variant::is) == gen_partitioned(3, 3, 0.3, 9, Variant::is));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto pg = gen_partitioned(3, 2, 0.0, seed, Variant::clique);
        CHECK_NOTHROW(validate_partition(pg, true));
        CHECK_NOTHROW(multicolored_clique(pg));
    }
}

TEST_CASE("polarity table") {
    CHECK_FALSE(expected_reduced_yes("tsconn-degree", true));
    CHECK(expected_reduced_yes("tsconn-degree", false));
    CHECK_FALSE(expected_reduced_yes("tsconn-leafage", true));
    CHECK(expected_reduced_yes("tsreach-degree", true));
    CHECK_FALSE(expected_reduced_yes("tsreach-degree", false));
    CHECK(expected_reduced_yes("tsreach-leafage", true));
    CHECK_FALSE(is_lemma("tsconn-width"));
}

TEST_CASE("verify_lemma: tsconn-degree on P4, k=2") {
    auto r = verify_lemma("tsconn-degree", DegreeConnSource{path(4), 2}, kDefaultBudget, true, true);
    CHECK(r.source_yes);
    CHECK(r.reduced_verdict == "disconnected");
    CHECK(r.agrees);
    CHECK(r.claims_pass());
    CHECK(r.warnings.size() == 1);
    CHECK_THROWS_AS(verify_lemma("tsconn-degree", DegreeConnSource{path(4), 2}), PreconditionError);
}

TEST_CASE("verify_lemma: tsreach-degree") {
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}});
    auto r = verify_lemma("tsreach-degree", DegreeReachSource{g, {2}, {3}});
    CHECK(r.source_yes);
    CHECK(r.reduced_verdict == "reachable");
    CHECK(r.agrees);
}

TEST_CASE("verify_lemma: leafage examples at k=2, n=2") {
    auto conn = verify_lemma("tsconn-leafage", pattern(0), kDefaultBudget, false);
    CHECK(conn.source_yes);
    CHECK(conn.reduced_verdict == "disconnected");
    CHECK(conn.agrees);
    auto reach = verify_lemma("tsreach-leafage", pattern(1), kDefaultBudget, false);
    CHECK(reach.source_yes);
    CHECK(reach.reduced_verdict == "reachable");
    CHECK(reach.agrees);
    CHECK(canonical(report_to_json(reach)) ==
          canonical(report_to_json(verify_lemma("tsreach-leafage", pattern(1), kDefaultBudget, false))));
}

TEST_CASE("verify_lemma surfaces the budget") {
    CHECK_THROWS_AS(verify_lemma("tsreach-leafage", pattern(1), 100, false), ResourceExceeded);
}

TEST_CASE("sweeps over small families") {
    InstanceSpec split{"exhaustive-small", {2, 2, 1}, 0, 0, 0.5};
    auto s = sweep(split, "tsreach-degree");
    CHECK(s.total > 0);
    CHECK(s.ok());
    CHECK(std::is_sorted(s.reports.begin(), s.reports.end(),
                         [](const LemmaReport& a, const LemmaReport& b) { return a.digest < b.digest; }));
    InstanceSpec paths{"path", {4, 6, 2}, 0, 0, 0.5};
    auto p = sweep(paths, "tsconn-degree");
    CHECK(p.skipped == 2);
    CHECK(p.total == 1);
    CHECK(p.ok());
    CHECK(canonical(sweep_to_json(s)) == canonical(sweep_to_json(sweep(split, "tsreach-degree"))));
}

TEST_CASE("CLI exit codes") {
    auto dir = scratch_dir();
    write(dir / "p4.json", to_json(path(4)));
    write(dir / "bad.json", json{{"n", 2}, {"edges", {{0, 5}}}});
    write(dir / "p12.json", to_json(path(12)));
    CHECK(run_cli("ts-conn " + (dir / "p4.json").string() + " -k 2") == 0);
    CHECK(run_cli("ts-conn " + (dir / "bad.json").string() + " -k 2") == 2);
    CHECK(run_cli("--budget 10 ts-conn " + (dir / "p12.json").string() + " -k 3") == 3);
    CHECK(run_cli("verify-lemma tsconn-degree " + (dir / "p4.json").string() + " -k 2") == 2);
    CHECK(run_cli("verify-lemma tsconn-degree " + (dir / "p4.json").string() + " -k 2 --trust-precondition") == 0);
    CHECK(run_cli("sweep tsreach-degree --family exhaustive-small --sizes 2,2,1 --summary") == 0);
    CHECK(run_cli("no-such-command") == 2);
}

TEST_CASE("CLI sweep failures ship rerunnable bundles") {
    auto dir = scratch_dir() / "bundles";
    std::filesystem::remove_all(dir);
    int code = run_cli("sweep tsconn-leafage --family exhaustive-small --sizes 2,2 --no-claims --summary --bundle-dir " +
                       dir.string());
    CHECK(code == 4);
    std::size_t bundles = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        ++bundles;
        CHECK(run_cli("verify-lemma tsconn-leafage --no-claims " + entry.path().string()) == 4);
    }
    CHECK(bundles == 1);
}
