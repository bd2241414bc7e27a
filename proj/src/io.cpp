#include "tsr/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

json pairs_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
    json out = json::array();
    for (auto [a, b] : v) out.push_back({a, b});
    return out;
}

const char* palette(const std::string& key) {
    static const char* colors[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                   "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
    std::size_t h = 0;
    for (char c : key) h = h * 131 + static_cast<unsigned char>(c);
    return colors[h % (sizeof(colors) / sizeof(colors[0]))];
}

std::string set_text(const VertexSet& s, const std::vector<RoleLabel>* labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += labels && s[i] < labels->size() ? (*labels)[s[i]].name : std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    return guarded("graph", [&] {
        std::size_t n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        return Graph(n, edges);
    });
}

json to_json(const PartitionedGraph& pg) {
    json j = to_json(pg.graph);
    j["k"] = pg.k;
    j["class_size"] = pg.class_size;
    j["classes"] = pg.classes;
    return j;
}

PartitionedGraph partitioned_from_json(const json& j) {
    return guarded("partitioned graph", [&] {
        PartitionedGraph pg;
        pg.graph = graph_from_json(j);
        pg.k = j.at("k").get<std::size_t>();
        pg.class_size = j.at("class_size").get<std::size_t>();
        pg.classes = j.at("classes").get<std::vector<VertexSet>>();
        validate_partition(pg, false);
        return pg;
    });
}

json to_json(const TreeModel& m) {
    json edges = json::array();
    for (auto [a, b] : m.host.edges) edges.push_back({a, b});
    json labels = json::object();
    for (std::size_t x = 0; x < m.host.labels.size(); ++x)
        if (!m.host.labels[x].empty()) labels[std::to_string(x)] = m.host.labels[x];
    json models = json::object();
    for (std::size_t v = 0; v < m.models.size(); ++v) models[std::to_string(v)] = m.models[v];
    return {{"tree_nodes", m.host.nodes}, {"tree_edges", edges}, {"labels", labels}, {"models", models}};
}

TreeModel tree_model_from_json(const json& j) {
    return guarded("tree model", [&] {
        TreeModel m;
        m.host.nodes = j.at("tree_nodes").get<std::size_t>();
        for (const auto& e : j.at("tree_edges")) m.host.edges.emplace_back(e.at(0).get<HostNode>(), e.at(1).get<HostNode>());
        const json& labels = j.at("labels");
        if (!labels.empty()) {
            m.host.labels.assign(m.host.nodes, "");
            for (auto it = labels.begin(); it != labels.end(); ++it) {
                std::size_t x = std::stoul(it.key());
                if (x >= m.host.nodes) throw InvalidInput("label for a node out of range");
                m.host.labels[x] = it.value().get<std::string>();
            }
        }
        const json& models = j.at("models");
        m.models.assign(models.size(), {});
        for (auto it = models.begin(); it != models.end(); ++it) {
            std::size_t v = std::stoul(it.key());
            if (v >= m.models.size()) throw InvalidInput("model keys must be 0..n-1");
            m.models[v] = it.value().get<std::vector<HostNode>>();
        }
        validate_model(m);
        return m;
    });
}

json to_json(const CliqueTree& ct) { return {{"bags", ct.bags}, {"edges", pairs_to_json(ct.edges)}}; }

CliqueTree clique_tree_from_json(const json& j) {
    return guarded("clique tree", [&] {
        CliqueTree ct;
        ct.bags = j.at("bags").get<std::vector<VertexSet>>();
        for (const auto& e : j.at("edges")) ct.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        return ct;
    });
}

json config_to_json(const TokenConfig& c) { return json(c); }

TokenConfig config_from_json(const json& j) {
    return guarded("configuration", [&] {
        TokenConfig c = j.get<TokenConfig>();
        if (normalized(c) != c) throw InvalidInput("configuration must be sorted and duplicate-free");
        return c;
    });
}

json to_json(const MoveSeq& seq) {
    json slides = json::array();
    for (const auto& s : seq.slides) slides.push_back({s.from, s.to});
    return {{"start", seq.start}, {"slides", slides}};
}

json to_json(const ReductionArtifact& a) {
    json labels = json::array();
    for (const auto& l : a.labels) labels.push_back({{"tag", l.tag}, {"idx", l.idx}, {"name", l.name}});
    json witness;
    if (const auto* ct = std::get_if<CliqueTree>(&a.witness)) {
        witness = to_json(*ct);
        witness["type"] = "clique_tree";
    } else {
        witness = to_json(std::get<TreeModel>(a.witness));
        witness["type"] = "tree_model";
    }
    return {{"which", a.which},
            {"reduced", to_json(a.reduced)},
            {"labels", labels},
            {"witness", witness},
            {"target_k", a.target_k},
            {"initial", a.initial ? config_to_json(*a.initial) : json(nullptr)},
            {"final", a.final ? config_to_json(*a.final) : json(nullptr)},
            {"provenance", a.provenance},
            {"warnings", a.warnings}};
}

ReductionArtifact artifact_from_json(const json& j) {
    return guarded("artifact", [&] {
        ReductionArtifact a;
        a.which = j.at("which").get<std::string>();
        a.reduced = graph_from_json(j.at("reduced"));
        for (const auto& l : j.at("labels"))
            a.labels.push_back({l.at("tag").get<std::string>(), l.at("idx").get<std::vector<int>>(),
                                l.at("name").get<std::string>()});
        const json& w = j.at("witness");
        const std::string type = w.at("type").get<std::string>();
        if (type == "clique_tree")
            a.witness = clique_tree_from_json(w);
        else if (type == "tree_model")
            a.witness = tree_model_from_json(w);
        else
            throw InvalidInput("unknown witness type " + type);
        a.target_k = j.at("target_k").get<std::size_t>();
        if (!j.at("initial").is_null()) a.initial = config_from_json(j.at("initial"));
        if (!j.at("final").is_null()) a.final = config_from_json(j.at("final"));
        a.provenance = j.at("provenance").get<std::string>();
        a.warnings = j.at("warnings").get<std::vector<std::string>>();
        return a;
    });
}

json source_to_json(const SourceInstance& s) {
    if (const auto* d = std::get_if<DegreeConnSource>(&s))
        return {{"kind", "degree-conn"}, {"graph", to_json(d->graph)}, {"k", d->k}};
    if (const auto* r = std::get_if<DegreeReachSource>(&s))
        return {{"kind", "degree-reach"},
                {"graph", to_json(r->graph)},
                {"initial", config_to_json(r->initial)},
                {"target", config_to_json(r->target)}};
    return {{"kind", "partitioned"}, {"instance", to_json(std::get<PartitionedGraph>(s))}};
}

SourceInstance source_from_json(const json& j) {
    return guarded("source instance", [&]() -> SourceInstance {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "degree-conn") return DegreeConnSource{graph_from_json(j.at("graph")), j.at("k").get<std::size_t>()};
        if (kind == "degree-reach")
            return DegreeReachSource{graph_from_json(j.at("graph")), config_from_json(j.at("initial")),
                                     config_from_json(j.at("target"))};
        if (kind == "partitioned") return partitioned_from_json(j.at("instance"));
        throw InvalidInput("unknown source kind " + kind);
    });
}

std::string canonical(const json& j) { return j.dump(2); }

std::string sha256_hex(const std::string& text) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string source_digest(const SourceInstance& s) { return sha256_hex(canonical(source_to_json(s))); }

std::string ts_graph_dot(const Graph& g, std::size_t k, std::size_t budget) {
    std::map<TokenConfig, std::size_t> comp;
    std::size_t next = 0;
    for_each_k_independent_set(g, k, [&](const TokenConfig& c) {
        if (comp.count(c)) return false;
        for (auto& d : component_of(g, c, budget)) comp[d] = next;
        ++next;
        if (comp.size() > budget) throw ResourceExceeded(comp.size(), budget);
        return false;
    });
    auto name = [](const TokenConfig& c) {
        std::string s = "\"{";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "}\"";
    };
    std::ostringstream os;
    os << "graph TS_" << k << " {\n  node [style=filled];\n";
    for (const auto& [c, id] : comp)
        os << "  " << name(c) << " [fillcolor=\"" << palette("component" + std::to_string(id)) << "\"];\n";
    for (const auto& [c, id] : comp)
        for (const auto& d : successors(g, c))
            if (c < d) os << "  " << name(c) << " -- " << name(d) << ";\n";
    os << "}\n";
    return os.str();
}

std::string clique_tree_dot(const CliqueTree& ct, const std::vector<RoleLabel>* labels) {
    std::map<Vertex, std::size_t> occurrences;
    for (const auto& b : ct.bags)
        for (Vertex v : b) ++occurrences[v];
    std::ostringstream os;
    os << "graph clique_tree {\n  node [shape=box, style=filled];\n";
    for (std::size_t i = 0; i < ct.bags.size(); ++i) {
        const auto& b = ct.bags[i];
        std::string tag = "bag";
        if (labels && !b.empty()) {
            Vertex rare = *std::min_element(b.begin(), b.end(), [&](Vertex x, Vertex y) {
                return std::make_pair(occurrences[x], x) < std::make_pair(occurrences[y], y);
            });
            if (rare < labels->size()) tag = (*labels)[rare].tag;
        }
        os << "  B" << i << " [label=\"" << set_text(b, labels) << "\", fillcolor=\"" << palette(tag) << "\"];\n";
    }
    for (auto [a, b] : ct.edges) os << "  B" << a << " -- B" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string host_tree_dot(const TreeModel& m, const std::vector<RoleLabel>* labels) {
    // Each host node takes the colour of the role owning the smallest model through it.
    std::vector<std::size_t> owner(m.host.nodes, m.models.size());
    for (std::size_t v = 0; v < m.models.size(); ++v)
        for (HostNode x : m.models[v])
            if (owner[x] == m.models.size() || m.models[v].size() < m.models[owner[x]].size()) owner[x] = v;
    std::ostringstream os;
    os << "graph host_tree {\n  node [style=filled];\n";
    for (std::size_t x = 0; x < m.host.nodes; ++x) {
        std::string label = x < m.host.labels.size() && !m.host.labels[x].empty() ? m.host.labels[x] : std::to_string(x);
        std::string tag = "free";
        if (owner[x] < m.models.size())
            tag = labels && owner[x] < labels->size() ? (*labels)[owner[x]].tag : "model";
        os << "  N" << x << " [label=\"" << label << "\", fillcolor=\"" << palette(tag) << "\"];\n";
    }
    for (auto [a, b] : m.host.edges) os << "  N" << a << " -- N" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tsr
