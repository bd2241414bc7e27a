#include "tsr/claims.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

std::vector<Vertex> tagged(const ReductionArtifact& a, const std::string& tag,
                           const std::function<bool(const std::vector<int>&)>& keep = nullptr) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < a.labels.size(); ++v)
        if (a.labels[v].tag == tag && (!keep || keep(a.labels[v].idx))) out.push_back(static_cast<Vertex>(v));
    return out;
}

// Interval and connector vertices of class i.
std::vector<Vertex> class_region(const ReductionArtifact& a, int i) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < a.labels.size(); ++v) {
        const auto& l = a.labels[v];
        if ((l.tag == "u" || l.tag == "w" || l.tag == "connector") && l.idx[0] == i) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

struct Induced {
    Graph g;
    std::vector<Vertex> back;      // local -> original
    std::vector<Vertex> forward;   // original -> local (unused entries undefined)

    TokenConfig local(const TokenConfig& c) const {
        TokenConfig out;
        for (Vertex v : c) out.push_back(forward[v]);
        return normalized(std::move(out));
    }
};

Induced induce(const Graph& g, std::vector<Vertex> keep) {
    keep = normalized(std::move(keep));
    Induced h;
    h.back = keep;
    h.forward.assign(g.n(), 0);
    std::vector<char> in(g.n(), 0);
    for (std::size_t x = 0; x < keep.size(); ++x) {
        h.forward[keep[x]] = static_cast<Vertex>(x);
        in[keep[x]] = 1;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) edges.emplace_back(h.forward[u], h.forward[v]);
    h.g = Graph(keep.size(), edges);
    return h;
}

// Independent subsets of `pool` with r members, in lexicographic order of positions.
void for_each_independent(const Graph& g, const std::vector<Vertex>& pool, std::size_t r,
                          const std::function<bool(const TokenConfig&)>& f) {
    for_each_subset(pool.size(), r, [&](const VertexSet& pos) {
        TokenConfig c;
        for (Vertex x : pos) c.push_back(pool[x]);
        c = normalized(std::move(c));
        if (!is_independent(g, c)) return false;
        return f(c);
    });
}

TokenConfig merge(TokenConfig a, const TokenConfig& b) {
    a.insert(a.end(), b.begin(), b.end());
    return normalized(std::move(a));
}

bool has_slide(const Graph& g, const TokenConfig& c, Vertex from, Vertex to) {
    for (const auto& [s, next] : slide_moves(g, c))
        if (s.from == from && s.to == to) return true;
    return false;
}

std::optional<Vertex> slide_onto(const Graph& g, const TokenConfig& c, Vertex to) {
    for (const auto& [s, next] : slide_moves(g, c))
        if (s.to == to) return s.from;
    return std::nullopt;
}

ClaimResult fail(ClaimResult r, TokenConfig c, std::string detail) {
    r.pass = false;
    r.counterexample = std::move(c);
    r.detail = std::move(detail);
    return r;
}

}  // namespace

std::pair<std::size_t, std::size_t> leafage_shape(const ReductionArtifact& a) {
    std::size_t k = 0, n = 0;
    for (const auto& l : a.labels)
        if (l.tag == "u") {
            k = std::max<std::size_t>(k, l.idx[0]);
            n = std::max<std::size_t>(n, l.idx[1]);
        }
    return {k, n};
}

TokenConfig split_tokens(const ReductionArtifact& a, int i, std::size_t n, std::size_t s) {
    TokenConfig c;
    for (std::size_t x = 1; x <= s; ++x) c.push_back(a.vertex("u", {i, int(x)}));
    for (std::size_t x = s + 1; x <= n; ++x) c.push_back(a.vertex("w", {i, int(x)}));
    return normalized(std::move(c));
}

ClaimResult claim_structure(const ReductionArtifact& a) {
    ClaimResult r;
    r.id = "structure";
    auto defects = artifact_defects(a);
    r.checked = 1;
    if (!defects.empty()) {
        r.pass = false;
        for (const auto& d : defects) r.detail += (r.detail.empty() ? "" : "; ") + d;
        return r;
    }
    if (a.which == "tsconn-degree" || a.which == "tsreach-degree") {
        std::size_t bound = a.which == "tsconn-degree" ? 4 : 3;
        std::size_t d = max_degree(std::get<CliqueTree>(a.witness));
        r.detail = "clique-tree max degree " + std::to_string(d);
        r.pass = d <= bound;
    } else {
        auto [k, n] = leafage_shape(a);
        std::size_t expect = a.which == "tsconn-leafage" ? 2 * k + 1 : 3 * (k * (k - 1) / 2) + 2 * k + 2;
        std::size_t leaves = leaf_count(std::get<TreeModel>(a.witness));
        r.detail = "host tree leaves " + std::to_string(leaves) + ", expected " + std::to_string(expect);
        r.pass = leaves == expect;
    }
    return r;
}

ClaimResult claim_ntokens(const ReductionArtifact& a) {
    ClaimResult r;
    r.id = "cl:ntokens";
    auto [k, n] = leafage_shape(a);
    const Graph& g = a.reduced;
    std::vector<std::size_t> split(k + 1, 0);
    // Odometer over the splits of every class.
    while (true) {
        TokenConfig c;
        for (std::size_t i = 1; i <= k; ++i) c = merge(c, split_tokens(a, int(i), n, split[i]));
        if (!is_independent(g, c)) return fail(r, c, "split configuration is not independent");
        ++r.checked;
        for (const auto& [s, next] : slide_moves(g, c)) {
            const auto& l = a.labels[s.to];
            if (l.tag == "pink")
                return fail(r, c, "token slides onto " + l.name);
        }
        std::size_t i = k;
        while (i >= 1 && split[i] == n) split[i--] = 0;
        if (i == 0) break;
        ++split[i];
    }
    return r;
}

ClaimResult claim_lessthann(const ReductionArtifact& a) {
    ClaimResult r;
    r.id = "cl:lessthann";
    auto [k, n] = leafage_shape(a);
    const Graph& g = a.reduced;
    auto blues = tagged(a, "blue");
    auto greens = tagged(a, "green");
    const Vertex bstar = a.vertex("purple-bstar", {});
    for (int i = 1; i <= int(k); ++i) {
        auto region = class_region(a, i);
        std::vector<Vertex> keep = region;
        auto pinks = tagged(a, "pink", [&](const std::vector<int>& idx) { return idx[0] == i; });
        keep.insert(keep.end(), pinks.begin(), pinks.end());
        keep.insert(keep.end(), blues.begin(), blues.end());
        keep.insert(keep.end(), greens.begin(), greens.end());
        keep.push_back(bstar);
        Induced h = induce(g, keep);
        for (std::size_t m = 1; m < n; ++m) {
            TokenConfig target;
            for (std::size_t j = n * k - m + 1; j <= n * k; ++j) target.push_back(a.vertex("blue", {int(j)}));
            target = normalized(target);
            std::optional<TokenConfig> bad;
            for_each_independent(g, region, m, [&](const TokenConfig& c) {
                ++r.checked;
                if (ts_reachable(h.g, h.local(c), h.local(target))) return false;
                bad = c;
                return true;
            });
            if (bad) return fail(r, *bad, "tokens cannot reach the parking path through pink vertices");
        }
    }
    return r;
}

ClaimResult claim_edge(const ReductionArtifact& a) {
    ClaimResult r;
    r.id = "cl:edge";
    auto [k, n] = leafage_shape(a);
    (void)k;
    const Graph& g = a.reduced;
    const Vertex bstar = a.vertex("purple-bstar", {});
    for (Vertex h : tagged(a, "H-type")) {
        const auto& idx = a.labels[h].idx;
        const bool first = idx[4] == 1;
        const int exit_class = first ? idx[0] : idx[2], other = first ? idx[2] : idx[0];
        const std::size_t exit_split = first ? idx[1] : idx[3], matched = first ? idx[3] : idx[1];
        for (std::size_t s = 0; s <= n; ++s) {
            TokenConfig c = merge(split_tokens(a, exit_class, n, exit_split), split_tokens(a, other, n, s));
            ++r.checked;
            bool possible = false;
            if (auto from = slide_onto(g, c, h)) {
                TokenConfig next = c;
                *std::find(next.begin(), next.end(), *from) = h;
                next = normalized(next);
                possible = has_slide(g, next, h, bstar);
            }
            if (possible != (s == matched))
                return fail(r, c,
                            a.labels[h].name + (possible ? " usable at split " : " unusable at split ") +
                                std::to_string(s) + " of class " + std::to_string(other));
        }
    }
    return r;
}

ClaimResult claim_choke1(const ReductionArtifact& a, std::size_t budget, bool literal_guard) {
    ClaimResult r;
    r.id = literal_guard ? "cl:choke1-literal" : "cl:choke1";
    if (!a.initial) throw InvalidInput("reachability artifact lacks an initial configuration");
    const Graph& g = a.reduced;
    std::vector<char> region(g.n(), 0), guard(g.n(), 0);
    for (Vertex v : tagged(a, "I-index")) region[v] = 1;
    for (Vertex v : tagged(a, "blue")) guard[v] = 1;
    for (Vertex v : tagged(a, "green")) guard[v] = 1;
    for (Vertex v : tagged(a, literal_guard ? "K-index" : "J-index")) guard[v] = 1;
    for (const TokenConfig& c : component_of(g, *a.initial, budget)) {
        ++r.checked;
        if (std::none_of(c.begin(), c.end(), [&](Vertex v) { return guard[v]; })) continue;
        for (const auto& [s, next] : slide_moves(g, c))
            if (region[s.from] && !region[s.to])
                return fail(r, c, "token leaves " + a.labels[s.from].name + " for " + a.labels[s.to].name);
    }
    return r;
}

ClaimResult claim_atmost_n1(const ReductionArtifact& a) {
    ClaimResult r;
    r.id = "cl:atmostn+1tokens";
    auto [k, n] = leafage_shape(a);
    const Graph& g = a.reduced;
    for (int i = 1; i <= int(k); ++i) {
        auto reds = tagged(a, "red-H", [&](const std::vector<int>& idx) { return idx[0] == i || idx[2] == i; });
        std::optional<TokenConfig> bad;
        std::string detail;
        for_each_independent(g, class_region(a, i), n + 1, [&](const TokenConfig& c) {
            ++r.checked;
            for (Vertex red : reds)
                if (std::none_of(c.begin(), c.end(), [&](Vertex v) { return g.adjacent(v, red); })) {
                    bad = c;
                    detail = a.labels[red].name + " has no adjacent token";
                    return true;
                }
            return false;
        });
        if (bad) return fail(r, *bad, detail);
    }
    return r;
}

ClaimResult claim_usable(const ReductionArtifact& a) {
    ClaimResult r;
    r.id = "cl:usable";
    auto [k, n] = leafage_shape(a);
    (void)k;
    const Graph& g = a.reduced;
    const Vertex bstar = a.vertex("purple-bstar", {});
    for (Vertex red : tagged(a, "red-H")) {
        const auto& idx = a.labels[red].idx;
        const int i = idx[0], j = idx[2];
        const std::size_t p = idx[1], q = idx[3];
        for (std::size_t si = 0; si <= n; ++si)
            for (std::size_t sj = 0; sj <= n; ++sj) {
                TokenConfig c = merge(merge(split_tokens(a, i, n, si), split_tokens(a, j, n, sj)), {bstar});
                if (!is_independent(g, c)) return fail(r, c, "split configuration is not independent");
                ++r.checked;
                bool possible = has_slide(g, c, bstar, red);
                if (possible != (si == p && sj == q))
                    return fail(r, c, a.labels[red].name + (possible ? " usable" : " unusable") + " at splits " +
                                          std::to_string(si) + "," + std::to_string(sj));
                if (si == p && sj == q) {
                    TokenConfig blocked = merge(c, {a.vertex("K-index", {i, j})});
                    ++r.checked;
                    if (has_slide(g, blocked, bstar, red))
                        return fail(r, blocked, a.labels[red].name + " usable despite a token on its index vertex");
                }
            }
    }
    return r;
}

std::vector<ClaimResult> run_claims(const ReductionArtifact& a, std::size_t budget) {
    std::vector<ClaimResult> out{claim_structure(a)};
    if (!out[0].pass) return out;
    if (a.which == "tsconn-leafage") {
        out.push_back(claim_ntokens(a));
        out.push_back(claim_lessthann(a));
        out.push_back(claim_edge(a));
    } else if (a.which == "tsreach-leafage") {
        out.push_back(claim_choke1(a, budget));
        out.push_back(claim_atmost_n1(a));
        out.push_back(claim_usable(a));
    }
    return out;
}

}  // namespace tsr
