#include <algorithm>
#include <stdexcept>
#include <string>

#include "tsr/errors.hpp"
#include "tsr/io.hpp"
#include "tsr/reductions.hpp"

namespace tsr {

std::optional<Vertex> ReductionArtifact::find(const std::string& tag, const std::vector<int>& idx) const {
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v].tag == tag && labels[v].idx == idx) return static_cast<Vertex>(v);
    return std::nullopt;
}

Vertex ReductionArtifact::vertex(const std::string& tag, const std::vector<int>& idx) const {
    auto v = find(tag, idx);
    if (!v) throw std::out_of_range("no vertex with role " + tag);
    return *v;
}

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

RoleLabel role(const std::string& tag, std::vector<int> idx, std::string name) {
    return RoleLabel{tag, std::move(idx), std::move(name)};
}

VertexSet closed_nbhd(const Graph& g, Vertex v) {
    VertexSet s = g.neighbors(v);
    s.push_back(v);
    return normalized(std::move(s));
}

}  // namespace

ReductionArtifact reduce_tsconn_degree(const Graph& g, std::size_t k, bool check_blocking) {
    if (k < 2) throw ParameterError("tsconn-degree reduction requires k >= 2");
    const std::size_t n = g.n();
    ReductionArtifact a;
    a.which = "tsconn-degree";
    a.provenance = source_digest(DegreeConnSource{g, k});

    const std::size_t bound = std::min(2 * k - 1, n);
    std::uint64_t work = 0;
    for (std::size_t r = 1; r <= bound; ++r) work += binom(n, r);
    if (!check_blocking) {
        a.warnings.push_back("blocking-set precondition not checked (trusted by caller)");
    } else if (work <= kBlockingCheckLimit) {
        if (auto b = smallest_blocking_set_upto(g, bound)) {
            std::string members;
            for (Vertex v : *b) members += (members.empty() ? "" : ",") + std::to_string(v);
            throw PreconditionError("source has a blocking set of size <= 2k-1: {" + members + "}");
        }
    } else {
        a.warnings.push_back("blocking-set precondition not checked (instance too large)");
    }

    const std::size_t nc = n + k + 1, nw = n + k + 2;
    auto c = [&](std::size_t i) { return static_cast<Vertex>(i - 1); };
    auto w = [&](std::size_t i) { return static_cast<Vertex>(nc + i - 1); };
    auto x = [&](std::size_t i) { return static_cast<Vertex>(nc + nw + i - 1); };
    auto y = [&](std::size_t i) { return static_cast<Vertex>(nc + 2 * nw + i - 1); };

    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= nc; ++i)
        for (std::size_t j = i + 1; j <= nc; ++j) edges.emplace_back(c(i), c(j));
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(c(u + 1), w(v + 1));
        edges.emplace_back(c(v + 1), w(u + 1));
    }
    for (std::size_t i = 1; i <= nc; ++i) edges.emplace_back(c(i), w(i));
    for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(c(i), w(nw));
    for (std::size_t i = 1; i <= nw; ++i) {
        edges.emplace_back(x(i), y(i));
        for (std::size_t j = 1; j <= nc; ++j) edges.emplace_back(x(i), c(j));
    }
    a.reduced = Graph(nc + 3 * nw, edges);
    a.target_k = k + 1;

    for (std::size_t i = 1; i <= nc; ++i) a.labels.push_back(role("C", {int(i)}, "c_" + std::to_string(i)));
    for (std::size_t i = 1; i <= nw; ++i) a.labels.push_back(role("W", {int(i)}, "w_" + std::to_string(i)));
    for (std::size_t i = 1; i <= nw; ++i) a.labels.push_back(role("X", {int(i)}, "x_" + std::to_string(i)));
    for (std::size_t i = 1; i <= nw; ++i) a.labels.push_back(role("Y", {int(i)}, "y_" + std::to_string(i)));

    CliqueTree ct;
    VertexSet cset;
    for (std::size_t i = 1; i <= nc; ++i) cset.push_back(c(i));
    for (std::size_t i = 1; i <= nw; ++i) {
        VertexSet u = cset;
        u.push_back(x(i));
        ct.bags.push_back(normalized(u));
    }
    for (std::size_t i = 1; i <= nw; ++i) ct.bags.push_back(closed_nbhd(a.reduced, w(i)));
    for (std::size_t i = 1; i <= nw; ++i) ct.bags.push_back({x(i), y(i)});
    for (std::size_t i = 0; i < nw; ++i) {
        if (i + 1 < nw) ct.edges.emplace_back(i, i + 1);
        ct.edges.emplace_back(i, nw + i);
        ct.edges.emplace_back(i, 2 * nw + i);
    }
    std::sort(ct.edges.begin(), ct.edges.end());
    a.witness = ct;
    return a;
}

ReductionArtifact reduce_tsreach_degree(const Graph& g, const TokenConfig& i0, const TokenConfig& j0) {
    auto split = split_partition(g);
    if (!split) throw InvalidInput("source graph is not a split graph");
    validate_set(g, i0);
    validate_set(g, j0);
    if (!is_independent(g, i0) || !is_independent(g, j0))
        throw InvalidInput("source configurations must be independent sets");
    if (i0.size() != j0.size()) throw InvalidInput("source configurations differ in size");

    ReductionArtifact a;
    a.which = "tsreach-degree";
    a.provenance = source_digest(DegreeReachSource{g, i0, j0});
    const VertexSet& cl = split->clique;
    const VertexSet& ind = split->independent;
    const std::size_t p = cl.size(), q = ind.size();
    auto d = [&](std::size_t i) { return static_cast<Vertex>(i - 1); };
    auto w = [&](std::size_t j) { return static_cast<Vertex>(p + j - 1); };
    auto s = [&](std::size_t j) { return static_cast<Vertex>(p + q + j - 1); };

    std::vector<Vertex> phi(g.n());
    for (std::size_t i = 1; i <= p; ++i) phi[cl[i - 1]] = d(i);
    for (std::size_t j = 1; j <= q; ++j) phi[ind[j - 1]] = w(j);

    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= p; ++i)
        for (std::size_t j = i + 1; j <= p; ++j) edges.emplace_back(d(i), d(j));
    for (std::size_t i = 1; i <= p; ++i)
        for (std::size_t j = 1; j <= q; ++j)
            if (g.adjacent(cl[i - 1], ind[j - 1])) edges.emplace_back(d(i), w(j));
    for (std::size_t j = 1; j <= q; ++j)
        for (std::size_t i = 1; i <= p; ++i) edges.emplace_back(s(j), d(i));
    a.reduced = Graph(p + 2 * q, edges);

    for (std::size_t i = 1; i <= p; ++i) a.labels.push_back(role("Cprime", {int(i)}, "d_" + std::to_string(i)));
    for (std::size_t j = 1; j <= q; ++j) a.labels.push_back(role("W", {int(j)}, "w_" + std::to_string(j)));
    for (std::size_t j = 1; j <= q; ++j) a.labels.push_back(role("S", {int(j)}, "s_" + std::to_string(j)));

    auto image = [&](const TokenConfig& c) {
        TokenConfig out;
        for (Vertex v : c) out.push_back(phi[v]);
        return normalized(std::move(out));
    };
    a.target_k = i0.size();
    a.initial = image(i0);
    a.final = image(j0);

    // Bags U_j = {s_j} + C' on a path, each with the pendant bag N[w_j].
    CliqueTree ct;
    VertexSet cset;
    for (std::size_t i = 1; i <= p; ++i) cset.push_back(d(i));
    if (q == 0) {
        if (p > 0) ct.bags.push_back(cset);
    } else {
        for (std::size_t j = 1; j <= q; ++j) {
            VertexSet u = cset;
            u.push_back(s(j));
            ct.bags.push_back(normalized(u));
        }
        for (std::size_t j = 1; j <= q; ++j) ct.bags.push_back(closed_nbhd(a.reduced, w(j)));
        for (std::size_t j = 0; j < q; ++j) {
            if (j + 1 < q) ct.edges.emplace_back(j, j + 1);
            ct.edges.emplace_back(j, q + j);
        }
        std::sort(ct.edges.begin(), ct.edges.end());
    }
    a.witness = ct;
    return a;
}

std::vector<std::string> artifact_defects(const ReductionArtifact& a) {
    std::vector<std::string> out;
    if (a.labels.size() != a.reduced.n()) out.push_back("label count differs from vertex count");
    std::vector<std::pair<std::string, std::vector<int>>> keys;
    for (const auto& l : a.labels) keys.emplace_back(l.tag, l.idx);
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) out.push_back("duplicate role labels");
    if (!recognize_chordal(a.reduced)) out.push_back("reduced graph is not chordal");
    if (const auto* ct = std::get_if<CliqueTree>(&a.witness)) {
        if (!check_clique_tree(a.reduced, *ct)) out.push_back("witness clique tree fails the check");
    } else {
        const auto& m = std::get<TreeModel>(a.witness);
        try {
            if (!(realize(m) == a.reduced)) out.push_back("witness model does not realize the reduced graph");
        } catch (const InvalidInput& e) {
            out.push_back(std::string("witness model invalid: ") + e.what());
        }
    }
    for (const auto* c : {&a.initial, &a.final}) {
        if (!*c) continue;
        bool ok = (*c)->size() == a.target_k;
        try {
            ok = ok && is_independent(a.reduced, **c);
        } catch (const InvalidInput&) {
            ok = false;
        }
        if (!ok) out.push_back("initial/final configuration invalid");
    }
    return out;
}

}  // namespace tsr
