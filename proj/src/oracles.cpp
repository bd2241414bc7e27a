#include "tsr/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tsr/errors.hpp"

namespace tsr {

void validate_partition(const PartitionedGraph& pg, bool classes_independent) {
    const Graph& g = pg.graph;
    if (pg.classes.size() != pg.k) throw InvalidInput("class count does not match k");
    if (pg.k * pg.class_size != g.n()) throw InvalidInput("classes do not cover the vertex set");
    std::vector<char> seen(g.n(), 0);
    for (const auto& cls : pg.classes) {
        if (cls.size() != pg.class_size) throw InvalidInput("class has the wrong size");
        validate_set(g, cls);
        for (Vertex v : cls) {
            if (seen[v]) throw InvalidInput("vertex " + std::to_string(v) + " in two classes");
            seen[v] = 1;
        }
        if (classes_independent && !is_independent(g, cls))
            throw InvalidInput("class is not an independent set");
    }
}

std::optional<VertexSet> min_dominating_set(const Graph& g, std::size_t bound) {
    if (bound > g.n()) throw InvalidInput("domination bound exceeds vertex count");
    std::optional<VertexSet> found;
    for (std::size_t r = 0; r <= bound && !found; ++r)
        for_each_subset(g.n(), r, [&](const VertexSet& s) {
            if (!is_dominating(g, s)) return false;
            found = s;
            return true;
        });
    return found;
}

namespace {

// Scans the n^k selections (one vertex per class) in odometer order.
template <class Accept>
std::optional<VertexSet> scan_selections(const PartitionedGraph& pg, Accept&& accept) {
    if (pg.k == 0) return VertexSet{};
    if (pg.class_size == 0) return std::nullopt;
    std::vector<std::size_t> pick(pg.k, 0);
    VertexSet sel(pg.k);
    while (true) {
        for (std::size_t i = 0; i < pg.k; ++i) sel[i] = pg.classes[i][pick[i]];
        if (accept(sel)) return normalized(sel);
        std::size_t i = pg.k;
        while (i > 0 && pick[i - 1] + 1 == pg.class_size) pick[--i] = 0;
        if (i == 0) return std::nullopt;
        ++pick[i - 1];
    }
}

}  // namespace

std::optional<VertexSet> multicolored_independent_set(const PartitionedGraph& pg) {
    validate_partition(pg, true);
    return scan_selections(pg, [&](const VertexSet& sel) {
        for (std::size_t a = 0; a < sel.size(); ++a)
            for (std::size_t b = a + 1; b < sel.size(); ++b)
                if (pg.graph.adjacent(sel[a], sel[b])) return false;
        return true;
    });
}

void validate_clique_instance(const PartitionedGraph& pg) {
    validate_partition(pg, false);
    for (std::size_t i = 0; i < pg.k; ++i) {
        bool incident = false;
        for (Vertex v : pg.classes[i])
            for (Vertex x : pg.graph.neighbors(v))
                if (!std::binary_search(pg.classes[i].begin(), pg.classes[i].end(), x)) incident = true;
        if (!incident)
            throw InvalidInput("class " + std::to_string(i) + " has no incident cross edge");
    }
}

std::optional<VertexSet> multicolored_clique(const PartitionedGraph& pg) {
    validate_clique_instance(pg);
    return scan_selections(pg, [&](const VertexSet& sel) {
        for (std::size_t a = 0; a < sel.size(); ++a)
            for (std::size_t b = a + 1; b < sel.size(); ++b)
                if (!pg.graph.adjacent(sel[a], sel[b])) return false;
        return true;
    });
}

std::optional<SplitWitness> split_partition(const Graph& g) {
    // Hammer-Simeone degree-sequence test; the top-m vertices by degree form the clique.
    const std::size_t n = g.n();
    std::vector<Vertex> by_deg(n);
    std::iota(by_deg.begin(), by_deg.end(), Vertex{0});
    std::stable_sort(by_deg.begin(), by_deg.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(by_deg[i]) + 1 >= i + 1) m = i + 1;
    std::size_t lhs = 0, rhs = m * (m - (m > 0 ? 1 : 0));
    for (std::size_t i = 0; i < n; ++i) (i < m ? lhs : rhs) += g.degree(by_deg[i]);
    if (lhs != rhs) return std::nullopt;
    SplitWitness w;
    w.clique.assign(by_deg.begin(), by_deg.begin() + static_cast<std::ptrdiff_t>(m));
    w.independent.assign(by_deg.begin() + static_cast<std::ptrdiff_t>(m), by_deg.end());
    w.clique = normalized(w.clique);
    w.independent = normalized(w.independent);
    return w;
}

}  // namespace tsr
