#include <algorithm>
#include <string>
#include <tuple>

#include "tsr/errors.hpp"
#include "tsr/io.hpp"
#include "tsr/reductions.hpp"

namespace tsr {

namespace {

class ModelBuilder {
public:
    HostNode node(std::string label) {
        host_.labels.push_back(std::move(label));
        return static_cast<HostNode>(host_.nodes++);
    }
    void link(HostNode a, HostNode b) { host_.edges.emplace_back(std::min(a, b), std::max(a, b)); }

    Vertex add(std::string tag, std::vector<int> idx, std::string name, std::vector<HostNode> nodes) {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        models_.push_back(std::move(nodes));
        labels_.push_back(RoleLabel{std::move(tag), std::move(idx), std::move(name)});
        return static_cast<Vertex>(models_.size() - 1);
    }

    void finish(ReductionArtifact& a) {
        std::sort(host_.edges.begin(), host_.edges.end());
        TreeModel m{host_, models_};
        a.reduced = realize(m);
        a.labels = labels_;
        a.witness = std::move(m);
    }

private:
    HostTree host_;
    std::vector<std::vector<HostNode>> models_;
    std::vector<RoleLabel> labels_;
};

std::string sub(const std::string& base, std::initializer_list<int> idx) {
    std::string s = base;
    char sep = '_';
    for (int i : idx) {
        s += sep + std::to_string(i);
        sep = '.';
    }
    return s;
}

// One class branch t_i^a ... t_i ... t_i^b; left[x] and right[x] for x in 1..2n.
// left[1] = t_i^a, left[2n] is next to t_i; right[1] is next to t_i, right[2n] = t_i^b.
struct Branch {
    HostNode hub = 0;
    std::vector<HostNode> left, right;

    // Nodes left[from..2n]; empty when from > 2n.
    std::vector<HostNode> left_from(std::size_t from) const {
        std::vector<HostNode> out;
        for (std::size_t x = std::max<std::size_t>(from, 1); x < left.size(); ++x) out.push_back(left[x]);
        return out;
    }
    // Nodes right[1..to].
    std::vector<HostNode> right_to(std::size_t to) const {
        std::vector<HostNode> out;
        for (std::size_t x = 1; x <= to && x < right.size(); ++x) out.push_back(right[x]);
        return out;
    }
    std::vector<HostNode> all() const {
        auto out = left_from(1);
        out.push_back(hub);
        auto r = right_to(right.size() - 1);
        out.insert(out.end(), r.begin(), r.end());
        return out;
    }
};

Branch make_branch(ModelBuilder& b, HostNode hub, int i, std::size_t n) {
    Branch br;
    br.hub = hub;
    br.left.assign(2 * n + 1, 0);
    br.right.assign(2 * n + 1, 0);
    for (std::size_t x = 1; x <= 2 * n; ++x)
        br.left[x] = b.node(x == 1 ? sub("t", {i}) + "^a" : sub("a", {i, int(x)}));
    for (std::size_t x = 1; x <= 2 * n; ++x)
        br.right[x] = b.node(x == 2 * n ? sub("t", {i}) + "^b" : sub("b", {i, int(x)}));
    b.link(hub, br.left[2 * n]);
    for (std::size_t x = 1; x < 2 * n; ++x) b.link(br.left[x], br.left[x + 1]);
    b.link(hub, br.right[1]);
    for (std::size_t x = 1; x < 2 * n; ++x) b.link(br.right[x], br.right[x + 1]);
    return br;
}

// Parking path below t_0 with 2m nodes; node 2m is the leaf named `leaf`.
std::vector<HostNode> make_parking(ModelBuilder& b, HostNode root, const std::string& prefix,
                                   const std::string& leaf, std::size_t m) {
    std::vector<HostNode> path(2 * m + 1, 0);
    for (std::size_t x = 1; x <= 2 * m; ++x)
        path[x] = b.node(x == 2 * m ? leaf : prefix + "." + std::to_string(x));
    b.link(root, path[1]);
    for (std::size_t x = 1; x < 2 * m; ++x) b.link(path[x], path[x + 1]);
    return path;
}

void add_parking(ModelBuilder& b, const std::vector<HostNode>& path, std::size_t m,
                 std::vector<int> side, const std::string& suffix) {
    for (std::size_t j = 1; j <= m; ++j) {
        auto idx = side;
        idx.push_back(int(j));
        b.add("blue", idx, "blue" + suffix + "_" + std::to_string(j), {path[2 * j - 1], path[2 * j]});
    }
    for (std::size_t j = 1; j < m; ++j) {
        auto idx = side;
        idx.push_back(int(j));
        b.add("green", idx, "green" + suffix + "_" + std::to_string(j), {path[2 * j], path[2 * j + 1]});
    }
}

void add_intervals(ModelBuilder& b, const std::vector<Branch>& br, std::size_t n) {
    for (std::size_t i = 1; i < br.size(); ++i) {
        const Branch& t = br[i];
        for (std::size_t p = 1; p <= n; ++p)
            b.add("u", {int(i), int(p)}, sub("u", {int(i)}) + "^" + std::to_string(p),
                  {t.left[2 * p - 1], t.left[2 * p]});
        for (std::size_t p = 1; p <= n; ++p)
            b.add("w", {int(i), int(p)}, sub("w", {int(i)}) + "^" + std::to_string(p),
                  {t.right[2 * p - 1], t.right[2 * p]});
    }
}

void add_connectors(ModelBuilder& b, const std::vector<Branch>& br, std::size_t n) {
    for (std::size_t i = 1; i < br.size(); ++i) {
        const Branch& t = br[i];
        for (std::size_t p = 1; p < n; ++p)
            b.add("connector", {int(i), 1, int(p)}, sub("cu", {int(i), int(p)}),
                  {t.left[2 * p], t.left[2 * p + 1]});
        for (std::size_t p = 1; p < n; ++p)
            b.add("connector", {int(i), 2, int(p)}, sub("cw", {int(i), int(p)}),
                  {t.right[2 * p], t.right[2 * p + 1]});
    }
}

std::vector<HostNode> join(std::initializer_list<std::vector<HostNode>> parts) {
    std::vector<HostNode> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct CrossEdge {
    int i, p, j, q;  // p-th vertex of class i adjacent to q-th vertex of class j, i < j
};

std::vector<CrossEdge> cross_edges(const PartitionedGraph& pg) {
    std::vector<int> cls(pg.graph.n()), pos(pg.graph.n());
    for (std::size_t i = 0; i < pg.k; ++i)
        for (std::size_t p = 0; p < pg.class_size; ++p) {
            cls[pg.classes[i][p]] = int(i) + 1;
            pos[pg.classes[i][p]] = int(p) + 1;
        }
    std::vector<CrossEdge> out;
    for (auto [a, b] : pg.graph.edges()) {
        if (cls[a] == cls[b]) continue;
        if (cls[a] > cls[b]) std::swap(a, b);
        out.push_back({cls[a], pos[a], cls[b], pos[b]});
    }
    std::sort(out.begin(), out.end(), [](const CrossEdge& x, const CrossEdge& y) {
        return std::tie(x.i, x.p, x.j, x.q) < std::tie(y.i, y.p, y.j, y.q);
    });
    return out;
}

}  // namespace

ReductionArtifact reduce_tsconn_leafage(const PartitionedGraph& pg) {
    validate_partition(pg, true);
    if (pg.k < 1 || pg.class_size < 1) throw InvalidInput("need k >= 1 classes of size n >= 1");
    const std::size_t k = pg.k, n = pg.class_size, nk = n * k;
    ReductionArtifact a;
    a.which = "tsconn-leafage";
    a.provenance = source_digest(pg);
    a.target_k = nk;

    ModelBuilder b;
    HostNode t0 = b.node("t_0");
    std::vector<HostNode> hub(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
        hub[i] = b.node(sub("t", {int(i)}));
        b.link(t0, hub[i]);
    }
    std::vector<Branch> br(k + 1);
    for (std::size_t i = 1; i <= k; ++i) br[i] = make_branch(b, hub[i], int(i), n);
    auto park = make_parking(b, t0, "p", "t_p", nk);

    add_parking(b, park, nk, {}, "");
    std::vector<HostNode> bstar{t0, park[1]};
    for (std::size_t i = 1; i <= k; ++i) bstar.push_back(hub[i]);
    b.add("purple-bstar", {}, "b*", bstar);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            if (i == j) continue;
            auto nodes = br[i].all();
            nodes.insert(nodes.end(), {t0, hub[j], br[j].left[2 * n], br[j].right[1]});
            b.add("orange", {int(i), int(j)}, sub("orange", {int(i), int(j)}), nodes);
        }
    add_intervals(b, br, n);
    add_connectors(b, br, n);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t p = 1; p < n; ++p)
            b.add("pink", {int(i), int(p)}, sub("y", {int(i)}) + "^" + std::to_string(p),
                  join({br[i].left_from(2 * p), {hub[i]}, br[i].right_to(2 * p + 1)}));
    for (const auto& e : cross_edges(pg)) {
        const Branch &bi = br[e.i], &bj = br[e.j];
        std::vector<HostNode> centre{hub[e.i], t0, hub[e.j]};
        auto p = std::size_t(e.p), q = std::size_t(e.q);
        std::string name = sub("H", {e.i, e.p, e.j, e.q});
        b.add("H-type", {e.i, e.p, e.j, e.q, 1}, name + "/1",
              join({bi.left_from(2 * p), bi.right_to(2 * p), centre, bj.left_from(2 * q + 2),
                    bj.right_to(2 * q - 1)}));
        b.add("H-type", {e.i, e.p, e.j, e.q, 2}, name + "/2",
              join({bj.left_from(2 * q), bj.right_to(2 * q - 1), centre, bi.left_from(2 * p + 2),
                    bi.right_to(2 * p - 1)}));
    }
    b.finish(a);
    return a;
}

ReductionArtifact reduce_tsreach_leafage(const PartitionedGraph& pg) {
    validate_clique_instance(pg);
    if (pg.k < 2 || pg.class_size < 1) throw InvalidInput("need k >= 2 classes of size n >= 1");
    const std::size_t k = pg.k, n = pg.class_size, nk = n * k;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= int(k); ++i)
        for (int j = i + 1; j <= int(k); ++j) pairs.emplace_back(i, j);
    const std::size_t kk = pairs.size();

    ReductionArtifact a;
    a.which = "tsreach-leafage";
    a.provenance = source_digest(pg);
    a.target_k = nk + kk;

    ModelBuilder b;
    HostNode t0 = b.node("t_0");
    std::vector<HostNode> hub(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
        hub[i] = b.node(sub("t", {int(i)}));
        b.link(t0, hub[i]);
    }
    std::vector<HostNode> lI(kk + 1), tI(kk + 1), lJ(kk + 1), tJ(kk + 1), lK(kk), tK(kk);
    for (std::size_t c = 1; c <= kk; ++c) {
        lI[c] = b.node("l^I_" + std::to_string(c));
        tI[c] = b.node("t^I_" + std::to_string(c));
        b.link(t0, lI[c]);
        b.link(lI[c], tI[c]);
    }
    for (std::size_t c = 1; c <= kk; ++c) {
        lJ[c] = b.node("l^J_" + std::to_string(c));
        tJ[c] = b.node("t^J_" + std::to_string(c));
        b.link(t0, lJ[c]);
        b.link(lJ[c], tJ[c]);
    }
    for (std::size_t c = 0; c < kk; ++c) {
        std::string ij = std::to_string(pairs[c].first) + std::to_string(pairs[c].second);
        lK[c] = b.node("l^K_" + ij);
        tK[c] = b.node("t^K_" + ij);
        b.link(t0, lK[c]);
        b.link(lK[c], tK[c]);
    }
    std::vector<Branch> br(k + 1);
    for (std::size_t i = 1; i <= k; ++i) br[i] = make_branch(b, hub[i], int(i), n);
    auto parkI = make_parking(b, t0, "pI", "t_P^I", nk);
    auto parkJ = make_parking(b, t0, "pJ", "t_P^J", nk);

    add_parking(b, parkI, nk, {1}, "I");
    add_parking(b, parkJ, nk, {2}, "J");
    std::vector<HostNode> bstar{t0, parkI[1], parkJ[1]};
    for (std::size_t i = 1; i <= k; ++i) bstar.push_back(hub[i]);
    b.add("purple-bstar", {}, "b*", bstar);
    std::vector<HostNode> choke{t0};
    choke.insert(choke.end(), parkI.begin() + 1, parkI.end());
    choke.insert(choke.end(), parkJ.begin() + 1, parkJ.end());
    for (std::size_t c = 1; c <= kk; ++c) {
        choke.push_back(lJ[c]);
        choke.push_back(lI[c]);
    }
    b.add("choke", {1}, "C_1", choke);
    add_intervals(b, br, n);
    add_connectors(b, br, n);
    for (std::size_t i = 1; i <= k; ++i)
        b.add("connector", {int(i), 3, 1}, sub("cm", {int(i)}),
              {br[i].left[2 * n], hub[i], br[i].right[1]});
    for (const auto& e : cross_edges(pg)) {
        std::size_t c = std::find(pairs.begin(), pairs.end(), std::make_pair(e.i, e.j)) - pairs.begin();
        auto p = std::size_t(e.p), q = std::size_t(e.q);
        b.add("red-H", {e.i, e.p, e.j, e.q}, sub("r", {e.i, e.j}) + "^" + std::to_string(e.p) + "." + std::to_string(e.q),
              join({br[e.i].left_from(2 * p + 1), br[e.i].right_to(2 * p), br[e.j].left_from(2 * q + 1),
                    br[e.j].right_to(2 * q), {hub[e.i], t0, hub[e.j], lK[c]}}));
    }
    for (std::size_t c = 1; c <= kk; ++c)
        b.add("I-index", {int(c), 1}, "l^I_" + std::to_string(c), {lI[c], tI[c]});
    for (std::size_t c = 1; c <= kk; ++c)
        b.add("I-index", {int(c), 2}, "t^I_" + std::to_string(c), {tI[c]});
    for (std::size_t c = 0; c < kk; ++c)
        b.add("K-index", {pairs[c].first, pairs[c].second},
              sub("g", {pairs[c].first, pairs[c].second}), {tK[c], lK[c]});
    for (std::size_t c = 1; c <= kk; ++c)
        b.add("J-index", {int(c)}, "p_" + std::to_string(c), {tJ[c], lJ[c]});
    for (std::size_t c = 0; c < kk; ++c)
        for (std::size_t d = 1; d <= kk; ++d)
            b.add("cij-connector", {pairs[c].first, pairs[c].second, int(d)},
                  sub("c", {pairs[c].first, pairs[c].second, int(d)}), {lK[c], t0, lJ[d]});
    b.finish(a);

    TokenConfig init, fin;
    for (std::size_t c = 1; c <= kk; ++c) {
        init.push_back(a.vertex("I-index", {int(c), 1}));
        fin.push_back(a.vertex("J-index", {int(c)}));
    }
    for (std::size_t j = 1; j <= nk; ++j) {
        init.push_back(a.vertex("blue", {1, int(j)}));
        fin.push_back(a.vertex("blue", {2, int(j)}));
    }
    a.initial = normalized(init);
    a.final = normalized(fin);
    return a;
}

}  // namespace tsr
