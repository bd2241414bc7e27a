#include "tsr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

template <class T>
const T& source_as(const SourceInstance& s, const std::string& which) {
    if (const T* p = std::get_if<T>(&s)) return *p;
    throw InvalidInput("source instance kind does not match lemma " + which);
}

const char* verdict_name(Connectivity c) {
    switch (c) {
        case Connectivity::connected: return "connected";
        case Connectivity::disconnected: return "disconnected";
        default: return "empty";
    }
}

void connectivity_verdict(LemmaReport& r, const ReductionArtifact& a, std::size_t budget, bool& reduced_yes) {
    auto v = ts_connected(a.reduced, a.target_k, budget);
    r.reduced_verdict = verdict_name(v.kind);
    r.states = v.total;
    if (v.witness) r.reduced_witness = {config_to_json(v.witness->first), config_to_json(v.witness->second)};
    reduced_yes = v.kind != Connectivity::disconnected;
}

void reachability_verdict(LemmaReport& r, const ReductionArtifact& a, std::size_t budget, bool& reduced_yes) {
    auto seq = ts_reachable(a.reduced, *a.initial, *a.final, budget);
    reduced_yes = seq.has_value();
    r.reduced_verdict = reduced_yes ? "reachable" : "unreachable";
    if (seq) r.reduced_witness = {{"slides", seq->slides.size()}};
}

// {w_i : v_i in D} plus w_{n+k+2}, with D padded by its smallest non-members to size k.
ClaimResult frozen_witness(const ReductionArtifact& a, const Graph& g, std::size_t k, VertexSet d) {
    ClaimResult r;
    r.id = "frozen-witness";
    r.checked = 1;
    VertexSet pad;
    for (Vertex v = 0; d.size() + pad.size() < k && v < g.n(); ++v)
        if (!std::binary_search(d.begin(), d.end(), v)) pad.push_back(v);
    d.insert(d.end(), pad.begin(), pad.end());
    TokenConfig c;
    for (Vertex v : d) c.push_back(a.vertex("W", {int(v) + 1}));
    c.push_back(a.vertex("W", {int(g.n() + k + 2)}));
    c = normalized(c);
    if (!is_independent(a.reduced, c) || !is_frozen(a.reduced, c)) {
        r.pass = false;
        r.counterexample = c;
        r.detail = "configuration built from the dominating set is not frozen";
    }
    return r;
}

}  // namespace

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(Vertex(v), Vertex(v + 1));
    return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(Vertex(v), Vertex(v + 1));
    if (n >= 3) e.emplace_back(Vertex(0), Vertex(n - 1));
    return Graph(n, e);
}

Graph gen_nonblocking_instance(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t attempts) {
    if (k < 2) throw ParameterError("non-blocking instances require k >= 2");
    Rng rng(seed);
    const std::size_t bound = std::min(2 * k - 1, n);
    for (std::size_t t = 0; t < attempts; ++t) {
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, 0.5)) e.emplace_back(u, v);
        Graph g(n, e);
        if (!smallest_blocking_set_upto(g, bound)) return g;
    }
    throw GenerationFailure("no non-blocking graph with n=" + std::to_string(n) + " found in " +
                            std::to_string(attempts) + " attempts");
}

PartitionedGraph gen_partitioned(std::size_t k, std::size_t n, double density, std::uint64_t seed, Variant variant) {
    Rng rng(seed);
    PartitionedGraph pg;
    pg.k = k;
    pg.class_size = n;
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet cls(n);
        std::iota(cls.begin(), cls.end(), Vertex(i * n));
        pg.classes.push_back(cls);
    }
    std::vector<Edge> e;
    for (Vertex u = 0; u < k * n; ++u)
        for (Vertex v = u + 1; v < k * n; ++v)
            if (u / n != v / n && coin(rng, density)) e.emplace_back(u, v);
    if (variant == Variant::clique && k >= 2) {
        std::vector<char> touched(k, 0);
        for (auto [u, v] : e) touched[u / n] = touched[v / n] = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (touched[i] || n == 0) continue;
            Vertex u = Vertex(i * n + pick(rng, n));
            std::size_t j = pick(rng, k - 1);
            if (j >= i) ++j;
            Vertex v = Vertex(j * n + pick(rng, n));
            e.emplace_back(std::min(u, v), std::max(u, v));
            touched[i] = touched[j] = 1;
        }
    }
    pg.graph = Graph(k * n, e);
    return pg;
}

Graph gen_split(std::size_t p, std::size_t q, double density, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> e;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = u + 1; v < p; ++v) e.emplace_back(u, v);
    for (Vertex u = 0; u < p; ++u)
        for (Vertex w = 0; w < q; ++w)
            if (coin(rng, density)) e.emplace_back(u, Vertex(p + w));
    return Graph(p + q, e);
}

TokenConfig gen_independent(const Graph& g, std::size_t size, Rng& rng, std::size_t attempts) {
    if (size == 0) return {};
    std::vector<Vertex> order(g.n());
    for (std::size_t t = 0; t < attempts; ++t) {
        std::iota(order.begin(), order.end(), Vertex(0));
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[pick(rng, i)]);
        TokenConfig c;
        for (Vertex v : order) {
            if (std::none_of(c.begin(), c.end(), [&](Vertex x) { return g.adjacent(x, v); })) c.push_back(v);
            if (c.size() == size) return normalized(c);
        }
    }
    throw GenerationFailure("no independent set of size " + std::to_string(size) + " found");
}

bool LemmaReport::claims_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

bool is_lemma(const std::string& which) {
    return which == "tsconn-degree" || which == "tsreach-degree" || which == "tsconn-leafage" ||
           which == "tsreach-leafage";
}

bool expected_reduced_yes(const std::string& which, bool source_yes) {
    if (which == "tsconn-degree" || which == "tsconn-leafage") return !source_yes;
    if (which == "tsreach-degree" || which == "tsreach-leafage") return source_yes;
    throw InvalidInput("unknown lemma " + which);
}

LemmaReport verify_lemma(const std::string& which, const SourceInstance& source, std::size_t budget,
                         bool run_claim_suite, bool trust_precondition) {
    if (!is_lemma(which)) throw InvalidInput("unknown lemma " + which);
    LemmaReport r;
    r.lemma = which;
    r.source_witness = nullptr;
    r.reduced_witness = nullptr;
    bool reduced_yes = false;
    std::optional<ReductionArtifact> art;
    std::optional<VertexSet> dominating;

    auto t = Clock::now();
    if (which == "tsconn-degree") {
        const auto& s = source_as<DegreeConnSource>(source, which);
        t = Clock::now();
        dominating = min_dominating_set(s.graph, std::min(s.k, s.graph.n()));
        r.source_yes = dominating.has_value();
        if (dominating) r.source_witness = config_to_json(*dominating);
        r.timings_ms["source"] = ms_since(t);
        t = Clock::now();
        art = reduce_tsconn_degree(s.graph, s.k, !trust_precondition);
        r.timings_ms["reduce"] = ms_since(t);
        t = Clock::now();
        connectivity_verdict(r, *art, budget, reduced_yes);
    } else if (which == "tsreach-degree") {
        const auto& s = source_as<DegreeReachSource>(source, which);
        t = Clock::now();
        auto seq = ts_reachable(s.graph, s.initial, s.target, budget);
        r.source_yes = seq.has_value();
        if (seq) r.source_witness = {{"slides", seq->slides.size()}};
        r.timings_ms["source"] = ms_since(t);
        t = Clock::now();
        art = reduce_tsreach_degree(s.graph, s.initial, s.target);
        r.timings_ms["reduce"] = ms_since(t);
        t = Clock::now();
        reachability_verdict(r, *art, budget, reduced_yes);
    } else {
        const auto& pg = source_as<PartitionedGraph>(source, which);
        const bool conn = which == "tsconn-leafage";
        t = Clock::now();
        auto sel = conn ? multicolored_independent_set(pg) : multicolored_clique(pg);
        r.source_yes = sel.has_value();
        if (sel) r.source_witness = config_to_json(*sel);
        r.timings_ms["source"] = ms_since(t);
        t = Clock::now();
        art = conn ? reduce_tsconn_leafage(pg) : reduce_tsreach_leafage(pg);
        r.timings_ms["reduce"] = ms_since(t);
        t = Clock::now();
        if (conn)
            connectivity_verdict(r, *art, budget, reduced_yes);
        else
            reachability_verdict(r, *art, budget, reduced_yes);
    }
    r.timings_ms["engine"] = ms_since(t);
    r.digest = art->provenance;
    r.warnings = art->warnings;
    r.agrees = reduced_yes == expected_reduced_yes(which, r.source_yes);

    if (run_claim_suite) {
        t = Clock::now();
        r.claims = run_claims(*art, budget);
        if (dominating) {
            const auto& s = std::get<DegreeConnSource>(source);
            r.claims.push_back(frozen_witness(*art, s.graph, s.k, *dominating));
        }
        r.timings_ms["claims"] = ms_since(t);
    }
    return r;
}

json report_to_json(const LemmaReport& r, bool with_timings) {
    json claims = json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"id", c.id},
                          {"pass", c.pass},
                          {"counterexample", c.counterexample ? config_to_json(*c.counterexample) : json(nullptr)},
                          {"detail", c.detail},
                          {"checked", c.checked}});
    json j = {{"lemma", r.lemma},
              {"digest", r.digest},
              {"source_yes", r.source_yes},
              {"source_witness", r.source_witness},
              {"reduced_verdict", r.reduced_verdict},
              {"reduced_witness", r.reduced_witness},
              {"agrees", r.agrees},
              {"claims", claims},
              {"states", r.states},
              {"warnings", r.warnings}};
    if (with_timings) j["timings_ms"] = r.timings_ms;
    return j;
}

std::vector<SourceInstance> generate_family(const InstanceSpec& spec, const std::string& which) {
    if (!is_lemma(which)) throw InvalidInput("unknown lemma " + which);
    auto need = [&](std::size_t m, const char* layout) {
        if (spec.sizes.size() != m)
            throw InvalidInput("family " + spec.family + " expects sizes " + layout);
    };
    auto only = [&](std::initializer_list<const char*> lemmas) {
        for (const char* l : lemmas)
            if (which == l) return;
        throw InvalidInput("family " + spec.family + " does not apply to lemma " + which);
    };
    const bool leafage = which == "tsconn-leafage" || which == "tsreach-leafage";
    const Variant variant = which == "tsreach-leafage" ? Variant::clique : Variant::is;
    Rng master(spec.seed);
    std::vector<SourceInstance> out;

    if (spec.family == "path" || spec.family == "cycle") {
        only({"tsconn-degree"});
        need(3, "n_lo,n_hi,k");
        for (std::size_t n = spec.sizes[0]; n <= spec.sizes[1]; ++n)
            out.push_back(DegreeConnSource{spec.family == "path" ? path_graph(n) : cycle_graph(n), spec.sizes[2]});
    } else if (spec.family == "nonblocking-random") {
        only({"tsconn-degree"});
        need(3, "n_lo,n_hi,k");
        if (spec.sizes[1] < spec.sizes[0]) throw InvalidInput("n_hi < n_lo");
        const std::size_t span = spec.sizes[1] - spec.sizes[0] + 1;
        for (std::size_t t = 0; t < spec.count; ++t)
            out.push_back(DegreeConnSource{gen_nonblocking_instance(spec.sizes[0] + t % span, spec.sizes[2], master()),
                                           spec.sizes[2]});
    } else if (spec.family == "split-random") {
        only({"tsreach-degree"});
        need(3, "p,q,tokens");
        for (std::size_t t = 0; t < spec.count; ++t) {
            Graph g = gen_split(spec.sizes[0], spec.sizes[1], spec.density, master());
            Rng rng(master());
            TokenConfig i0 = gen_independent(g, spec.sizes[2], rng);
            TokenConfig j0 = gen_independent(g, spec.sizes[2], rng);
            out.push_back(DegreeReachSource{g, i0, j0});
        }
    } else if (spec.family == "partitioned-random") {
        if (!leafage) throw InvalidInput("family partitioned-random applies to the leafage lemmas");
        need(2, "k,n");
        for (std::size_t t = 0; t < spec.count; ++t)
            out.push_back(gen_partitioned(spec.sizes[0], spec.sizes[1], spec.density, master(), variant));
    } else if (spec.family == "exhaustive-small") {
        if (which == "tsconn-degree") {
            need(2, "n_max,k");
            const std::size_t k = spec.sizes[1];
            for (std::size_t n = 1; n <= spec.sizes[0]; ++n) {
                std::vector<Edge> pairs;
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                    std::vector<Edge> e;
                    for (std::size_t b = 0; b < pairs.size(); ++b)
                        if (mask >> b & 1) e.push_back(pairs[b]);
                    Graph g(n, e);
                    if (!smallest_blocking_set_upto(g, std::min(2 * k - 1, n))) out.push_back(DegreeConnSource{g, k});
                }
            }
        } else if (which == "tsreach-degree") {
            need(3, "p_max,q_max,tokens_max");
            for (std::size_t p = 1; p <= spec.sizes[0]; ++p)
                for (std::size_t q = 1; q <= spec.sizes[1]; ++q)
                    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (p * q)); ++mask) {
                        std::vector<Edge> e;
                        for (Vertex u = 0; u < p; ++u)
                            for (Vertex v = u + 1; v < p; ++v) e.emplace_back(u, v);
                        for (std::size_t b = 0; b < p * q; ++b)
                            if (mask >> b & 1) e.emplace_back(Vertex(b / q), Vertex(p + b % q));
                        Graph g(p + q, e);
                        for (std::size_t s = 0; s <= spec.sizes[2] && s <= p + q; ++s) {
                            std::vector<TokenConfig> sets;
                            for_each_k_independent_set(g, s, [&](const TokenConfig& c) {
                                sets.push_back(c);
                                return false;
                            });
                            for (const auto& i0 : sets)
                                for (const auto& j0 : sets) out.push_back(DegreeReachSource{g, i0, j0});
                        }
                    }
        } else {
            need(2, "k,n");
            const std::size_t k = spec.sizes[0], n = spec.sizes[1];
            PartitionedGraph base = gen_partitioned(k, n, 0.0, 0, Variant::is);
            std::vector<Edge> pairs;
            for (Vertex u = 0; u < k * n; ++u)
                for (Vertex v = u + 1; v < k * n; ++v)
                    if (u / n != v / n) pairs.emplace_back(u, v);
            if (pairs.size() > 20) throw InvalidInput("too many cross pairs for exhaustive enumeration");
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                std::vector<Edge> e;
                for (std::size_t b = 0; b < pairs.size(); ++b)
                    if (mask >> b & 1) e.push_back(pairs[b]);
                PartitionedGraph pg = base;
                pg.graph = Graph(k * n, e);
                if (variant == Variant::clique) {
                    try {
                        validate_clique_instance(pg);
                    } catch (const InvalidInput&) {
                        continue;
                    }
                }
                out.push_back(pg);
            }
        }
    } else {
        throw InvalidInput("unknown instance family " + spec.family);
    }
    return out;
}

json bundle_for(const std::string& which, const SourceInstance& source, const LemmaReport& report) {
    return {{"which", which},
            {"source", source_to_json(source)},
            {"report", report_to_json(report)},
            {"rerun", "tsr verify-lemma " + which + " <bundle.json>"}};
}

SweepReport sweep_sources(const std::vector<SourceInstance>& sources, const std::string& which,
                          const std::string& family, std::size_t budget, bool run_claim_suite) {
    SweepReport s;
    s.which = which;
    s.family = family;
    std::vector<std::pair<LemmaReport, std::size_t>> done;
    for (std::size_t x = 0; x < sources.size(); ++x) {
        LemmaReport r;
        try {
            r = verify_lemma(which, sources[x], budget, run_claim_suite);
        } catch (const PreconditionError&) {
            ++s.skipped;
            continue;
        }
        ++s.total;
        if (r.agrees) ++s.agreed;
        if (!r.claims_pass()) ++s.claim_failures;
        if (!r.agrees || !r.claims_pass()) s.bundles.push_back(bundle_for(which, sources[x], r));
        done.emplace_back(std::move(r), x);
    }
    std::stable_sort(done.begin(), done.end(),
                     [](const auto& a, const auto& b) { return a.first.digest < b.first.digest; });
    for (auto& [r, x] : done) s.reports.push_back(std::move(r));
    return s;
}

SweepReport sweep(const InstanceSpec& spec, const std::string& which, std::size_t budget, bool run_claim_suite) {
    return sweep_sources(generate_family(spec, which), which, spec.family, budget, run_claim_suite);
}

json sweep_to_json(const SweepReport& s, bool with_reports) {
    json j = {{"which", s.which},
              {"family", s.family},
              {"total", s.total},
              {"agreed", s.agreed},
              {"claim_failures", s.claim_failures},
              {"skipped", s.skipped},
              {"ok", s.ok()},
              {"bundles", s.bundles}};
    if (with_reports) {
        json reports = json::array();
        for (const auto& r : s.reports) reports.push_back(report_to_json(r));
        j["reports"] = reports;
    }
    return j;
}

}  // namespace tsr
