#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tsr/errors.hpp"
#include "tsr/harness.hpp"

using namespace tsr;

namespace {

struct Globals {
    std::size_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
};

json read_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("cannot parse JSON: ") + e.what());
    }
}

void emit(const Globals& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(g.output);
    if (!out) throw InvalidInput("cannot write " + g.output);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit(const Globals& g, const json& j) { emit(g, canonical(j)); }

void require_json(const Globals& g, const char* cmd) {
    if (g.format != "json") throw InvalidInput(std::string(cmd) + " only supports --format json");
}

TokenConfig config_arg(const std::vector<Vertex>& v) { return normalized(v); }

// Accepts a counterexample bundle, a tagged source instance, or a bare graph / partitioned graph.
SourceInstance load_source(const std::string& which, const json& j, std::optional<std::size_t> k,
                           const std::vector<Vertex>& initial, const std::vector<Vertex>& target) {
    if (j.contains("source")) return source_from_json(j.at("source"));
    if (j.contains("kind")) return source_from_json(j);
    if (which == "tsconn-degree") {
        if (!k) throw InvalidInput("--k is required for a bare graph input");
        return DegreeConnSource{graph_from_json(j), *k};
    }
    if (which == "tsreach-degree") return DegreeReachSource{graph_from_json(j), config_arg(initial), config_arg(target)};
    return partitioned_from_json(j);
}

ReductionArtifact run_reduction(const std::string& which, const SourceInstance& s, bool trust) {
    auto mismatch = [&] { return InvalidInput("source instance kind does not match " + which); };
    if (which == "tsconn-degree") {
        const auto* d = std::get_if<DegreeConnSource>(&s);
        if (!d) throw mismatch();
        return reduce_tsconn_degree(d->graph, d->k, !trust);
    }
    if (which == "tsreach-degree") {
        const auto* d = std::get_if<DegreeReachSource>(&s);
        if (!d) throw mismatch();
        return reduce_tsreach_degree(d->graph, d->initial, d->target);
    }
    const auto* pg = std::get_if<PartitionedGraph>(&s);
    if (!pg) throw mismatch();
    if (which == "tsconn-leafage") return reduce_tsconn_leafage(*pg);
    if (which == "tsreach-leafage") return reduce_tsreach_leafage(*pg);
    throw InvalidInput("unknown reduction " + which);
}

const std::vector<std::string> kLemmas{"tsconn-degree", "tsreach-degree", "tsconn-leafage", "tsreach-leafage"};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Token sliding reconfiguration on chordal graphs: solvers, reductions and lemma checks"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget", g.budget, "State budget for reconfiguration searches")->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for generators and seeded sweeps")->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    app.add_option("-o,--output", g.output, "Write output to a file instead of stdout");
    app.fallthrough();

    std::string input = "-";
    std::optional<std::size_t> k;
    std::vector<Vertex> initial, target;
    std::string which;
    bool trust = false, no_claims = false, timings = false, summary = false;

    auto* chordal = app.add_subcommand("check-chordal", "Recognize a chordal graph and print a perfect elimination order");
    chordal->add_option("input", input, "Graph JSON file or - for stdin");

    auto* ctree = app.add_subcommand("clique-tree", "Build a clique tree of a chordal graph");
    ctree->add_option("input", input, "Graph JSON file or - for stdin");

    auto* conn = app.add_subcommand("ts-conn", "Decide whether TS_k(G) is connected");
    conn->add_option("input", input, "Graph JSON file or - for stdin");
    conn->add_option("-k,--k", k, "Token count")->required();

    auto* reach = app.add_subcommand("ts-reach", "Decide whether one token configuration reaches another");
    reach->add_option("input", input, "Graph JSON file or - for stdin");
    reach->add_option("--initial", initial, "Initial configuration, comma separated")->delimiter(',')->required();
    reach->add_option("--target", target, "Target configuration, comma separated")->delimiter(',')->required();

    auto* reduce = app.add_subcommand("reduce", "Build the reduced instance of a source instance");
    reduce->add_option("which", which, "Reduction")->check(CLI::IsMember(kLemmas))->required();
    reduce->add_option("input", input, "Source JSON file or - for stdin");
    reduce->add_option("-k,--k", k, "Token count for a bare graph input");
    reduce->add_option("--initial", initial, "Initial configuration for a bare split graph")->delimiter(',');
    reduce->add_option("--target", target, "Target configuration for a bare split graph")->delimiter(',');
    reduce->add_flag("--trust-precondition", trust, "Skip the blocking-set check");

    auto* verify = app.add_subcommand("verify-lemma", "Check a reduction lemma on one source instance");
    verify->add_option("which", which, "Lemma")->check(CLI::IsMember(kLemmas))->required();
    verify->add_option("input", input, "Source JSON, counterexample bundle, or - for stdin");
    verify->add_option("-k,--k", k, "Token count for a bare graph input");
    verify->add_option("--initial", initial, "Initial configuration for a bare split graph")->delimiter(',');
    verify->add_option("--target", target, "Target configuration for a bare split graph")->delimiter(',');
    verify->add_flag("--trust-precondition", trust, "Skip the blocking-set check");
    verify->add_flag("--no-claims", no_claims, "Skip the claim suite");
    verify->add_flag("--timings", timings, "Include timings in the report");

    InstanceSpec spec;
    std::string bundle_dir;
    auto* sw = app.add_subcommand("sweep", "Check a lemma over a family of instances");
    sw->add_option("which", which, "Lemma")->check(CLI::IsMember(kLemmas))->required();
    sw->add_option("--family", spec.family, "path | cycle | nonblocking-random | split-random | partitioned-random | exhaustive-small")
        ->required();
    sw->add_option("--sizes", spec.sizes, "Family size parameters, comma separated")->delimiter(',')->required();
    sw->add_option("--count", spec.count, "Instance count for seeded families");
    sw->add_option("--density", spec.density, "Edge probability for seeded families")->capture_default_str();
    sw->add_option("--bundle-dir", bundle_dir, "Directory for counterexample bundles");
    sw->add_flag("--no-claims", no_claims, "Skip the claim suites");
    sw->add_flag("--summary", summary, "Omit per-instance reports");

    std::string kind, variant = "is";
    std::size_t n = 0, classes = 2, p = 0, q = 0;
    double density = 0.5;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("kind", kind, "nonblocking | partitioned | split | path | cycle")
        ->check(CLI::IsMember({"nonblocking", "partitioned", "split", "path", "cycle"}))
        ->required();
    gen->add_option("-n,--n", n, "Vertex count (class size for partitioned)");
    gen->add_option("-k,--k", classes, "Token bound or class count")->capture_default_str();
    gen->add_option("--p", p, "Clique size of a split graph");
    gen->add_option("--q", q, "Independent-set size of a split graph");
    gen->add_option("--density", density, "Edge probability")->capture_default_str();
    gen->add_option("--variant", variant, "Partitioned variant")->check(CLI::IsMember({"is", "clique"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chordal->parsed()) {
            require_json(g, "check-chordal");
            Graph graph = graph_from_json(read_json(input));
            auto order = recognize_chordal(graph);
            json out = {{"chordal", order.has_value()}};
            out["elimination_order"] = order ? json(*order) : json(nullptr);
            emit(g, out);
        } else if (ctree->parsed()) {
            Graph graph = graph_from_json(read_json(input));
            CliqueTree ct = build_clique_tree(graph);
            if (g.format == "dot") {
                emit(g, clique_tree_dot(ct));
            } else {
                json out = to_json(ct);
                out["max_degree"] = max_degree(ct);
                emit(g, out);
            }
        } else if (conn->parsed()) {
            Graph graph = graph_from_json(read_json(input));
            if (g.format == "dot") {
                emit(g, ts_graph_dot(graph, *k, g.budget));
            } else {
                auto v = ts_connected(graph, *k, g.budget);
                json out = {{"verdict", v.kind == Connectivity::connected      ? "connected"
                                        : v.kind == Connectivity::disconnected ? "disconnected"
                                                                               : "empty"},
                            {"k_independent_sets", v.total},
                            {"reached", v.reached}};
                out["witness"] = v.witness ? json{config_to_json(v.witness->first), config_to_json(v.witness->second)}
                                           : json(nullptr);
                emit(g, out);
            }
        } else if (reach->parsed()) {
            require_json(g, "ts-reach");
            Graph graph = graph_from_json(read_json(input));
            auto seq = ts_reachable(graph, config_arg(initial), config_arg(target), g.budget);
            json out = {{"reachable", seq.has_value()}};
            out["sequence"] = seq ? to_json(*seq) : json(nullptr);
            emit(g, out);
        } else if (reduce->parsed()) {
            SourceInstance s = load_source(which, read_json(input), k, initial, target);
            ReductionArtifact a = run_reduction(which, s, trust);
            for (const auto& w : a.warnings) std::cerr << "warning: " << w << '\n';
            if (g.format == "dot") {
                if (const auto* ct = std::get_if<CliqueTree>(&a.witness))
                    emit(g, clique_tree_dot(*ct, &a.labels));
                else
                    emit(g, host_tree_dot(std::get<TreeModel>(a.witness), &a.labels));
            } else {
                emit(g, to_json(a));
            }
        } else if (verify->parsed()) {
            require_json(g, "verify-lemma");
            SourceInstance s = load_source(which, read_json(input), k, initial, target);
            LemmaReport r = verify_lemma(which, s, g.budget, !no_claims, trust);
            emit(g, report_to_json(r, timings));
            if (!r.agrees || !r.claims_pass()) return 4;
        } else if (sw->parsed()) {
            require_json(g, "sweep");
            spec.seed = g.seed;
            SweepReport s = sweep(spec, which, g.budget, !no_claims);
            if (!bundle_dir.empty()) {
                std::filesystem::create_directories(bundle_dir);
                for (const auto& b : s.bundles) {
                    std::string digest = b.at("report").at("digest").get<std::string>();
                    std::ofstream(std::filesystem::path(bundle_dir) / ("bundle_" + digest.substr(0, 16) + ".json"))
                        << canonical(b) << '\n';
                }
            }
            emit(g, sweep_to_json(s, !summary));
            if (!s.ok()) return 4;
        } else if (gen->parsed()) {
            require_json(g, "gen");
            if (kind == "nonblocking") {
                emit(g, to_json(gen_nonblocking_instance(n, classes, g.seed)));
            } else if (kind == "partitioned") {
                emit(g, to_json(gen_partitioned(classes, n, density, g.seed,
                                                variant == "clique" ? Variant::clique : Variant::is)));
            } else if (kind == "split") {
                emit(g, to_json(gen_split(p, q, density, g.seed)));
            } else {
                emit(g, to_json(kind == "path" ? path_graph(n) : cycle_graph(n)));
            }
        }
    } catch (const ResourceExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GenerationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
