#include "tsr/engine.hpp"

#include <algorithm>
#include <string>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

// Flat open-addressing set of fixed-length configurations with BFS parent links.
class StateStore {
public:
    StateStore(std::size_t k, std::size_t budget) : k_(k), budget_(budget) { rehash(1024); }

    std::size_t size() const { return parent_.size(); }
    const Vertex* at(std::size_t idx) const { return data_.data() + idx * k_; }
    TokenConfig config(std::size_t idx) const { return TokenConfig(at(idx), at(idx) + k_); }
    std::size_t parent(std::size_t idx) const { return parent_[idx]; }

    // Returns the index of cfg and whether it was newly inserted.
    std::pair<std::size_t, bool> insert(const Vertex* cfg, std::size_t parent) {
        std::size_t slot = probe(cfg);
        if (slots_[slot] != 0) return {slots_[slot] - 1, false};
        if (size() >= budget_) throw ResourceExceeded(size() + 1, budget_);
        data_.insert(data_.end(), cfg, cfg + k_);
        parent_.push_back(static_cast<std::uint32_t>(parent));
        slots_[slot] = static_cast<std::uint32_t>(size());
        if (size() * 2 > slots_.size()) rehash(slots_.size() * 2);
        return {size() - 1, true};
    }

    bool contains(const Vertex* cfg) const { return slots_[probe(cfg)] != 0; }

private:
    std::size_t hash(const Vertex* cfg) const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull ^ k_;
        for (std::size_t i = 0; i < k_; ++i) {
            h ^= cfg[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }

    std::size_t probe(const Vertex* cfg) const {
        std::size_t mask = slots_.size() - 1;
        std::size_t s = hash(cfg) & mask;
        while (slots_[s] != 0 && !std::equal(cfg, cfg + k_, at(slots_[s] - 1))) s = (s + 1) & mask;
        return s;
    }

    void rehash(std::size_t cap) {
        slots_.assign(cap, 0);
        std::size_t mask = cap - 1;
        for (std::size_t idx = 0; idx < size(); ++idx) {
            std::size_t s = hash(at(idx)) & mask;
            while (slots_[s] != 0) s = (s + 1) & mask;
            slots_[s] = static_cast<std::uint32_t>(idx + 1);
        }
    }

    std::size_t k_;
    std::size_t budget_;
    std::vector<Vertex> data_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> slots_;
};

constexpr std::size_t kNoParent = 0xFFFFFFFFu;

// Expands configurations; cover_[x] counts tokens in the closed neighbourhood of x.
class Expander {
public:
    explicit Expander(const Graph& g) : g_(g), cover_(g.n(), 0) {}

    template <class F>
    void each(const Vertex* cfg, std::size_t k, F&& f) {
        for (std::size_t a = 0; a < k; ++a) {
            ++cover_[cfg[a]];
            for (Vertex x : g_.neighbors(cfg[a])) ++cover_[x];
        }
        buf_.assign(cfg, cfg + k);
        for (std::size_t a = 0; a < k; ++a) {
            Vertex t = cfg[a];
            for (Vertex v : g_.neighbors(t)) {
                if (cover_[v] != 1) continue;
                place(cfg, k, a, v);
                f(Slide{t, v}, buf_);
            }
        }
        for (std::size_t a = 0; a < k; ++a) {
            --cover_[cfg[a]];
            for (Vertex x : g_.neighbors(cfg[a])) --cover_[x];
        }
    }

private:
    // Writes cfg with position a replaced by v, kept sorted, into buf_.
    void place(const Vertex* cfg, std::size_t k, std::size_t a, Vertex v) {
        std::size_t out = 0;
        bool put = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == a) continue;
            if (!put && v < cfg[i]) {
                buf_[out++] = v;
                put = true;
            }
            buf_[out++] = cfg[i];
        }
        if (!put) buf_[out++] = v;
    }

    const Graph& g_;
    std::vector<std::uint32_t> cover_;
    std::vector<Vertex> buf_;
};

void validate_config(const Graph& g, const TokenConfig& c) {
    validate_set(g, c);
    if (!is_independent(g, c)) throw InvalidInput("configuration is not an independent set");
}

// Breadth-first search over the component of the store entry at root.
// Stops early (returning the index) when stop_at is inserted.
std::size_t bfs(const Graph& g, StateStore& store, std::size_t k, std::size_t root,
                const TokenConfig* stop_at) {
    Expander ex(g);
    std::size_t found = kNoParent;
    std::vector<Vertex> cur(k);
    for (std::size_t head = root; head < store.size() && found == kNoParent; ++head) {
        std::copy(store.at(head), store.at(head) + k, cur.begin());
        ex.each(cur.data(), k, [&](const Slide&, const std::vector<Vertex>& next) {
            if (found != kNoParent) return;
            auto [idx, fresh] = store.insert(next.data(), head);
            if (fresh && stop_at && std::equal(next.begin(), next.end(), stop_at->begin())) found = idx;
        });
    }
    return found;
}

std::uint64_t count_rec(const Graph& g, const std::vector<Vertex>& cand, std::size_t need) {
    if (need == 1) return cand.size();
    std::uint64_t total = 0;
    std::vector<Vertex> next;
    for (std::size_t i = 0; i + need <= cand.size(); ++i) {
        next.clear();
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (!g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
        if (next.size() + 1 >= need) total += count_rec(g, next, need - 1);
    }
    return total;
}

bool enum_rec(const Graph& g, const std::vector<Vertex>& cand, std::size_t need, TokenConfig& cur,
              const std::function<bool(const TokenConfig&)>& f) {
    std::vector<Vertex> next;
    for (std::size_t i = 0; i + need <= cand.size(); ++i) {
        cur.push_back(cand[i]);
        if (need == 1) {
            if (f(cur)) return true;
        } else {
            next.clear();
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (!g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
            if (next.size() + 1 >= need && enum_rec(g, next, need - 1, cur, f)) return true;
        }
        cur.pop_back();
    }
    return false;
}

std::vector<Vertex> all_vertices(const Graph& g) {
    std::vector<Vertex> all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    return all;
}

}  // namespace

std::uint64_t count_k_independent_sets(const Graph& g, std::size_t k) {
    if (k == 0) return 1;
    if (k > g.n()) return 0;
    return count_rec(g, all_vertices(g), k);
}

void for_each_k_independent_set(const Graph& g, std::size_t k,
                                const std::function<bool(const TokenConfig&)>& f) {
    if (k == 0) {
        f(TokenConfig{});
        return;
    }
    if (k > g.n()) return;
    TokenConfig cur;
    enum_rec(g, all_vertices(g), k, cur, f);
}

std::vector<std::pair<Slide, TokenConfig>> slide_moves(const Graph& g, const TokenConfig& c) {
    validate_config(g, c);
    std::vector<std::pair<Slide, TokenConfig>> out;
    Expander ex(g);
    ex.each(c.data(), c.size(), [&](const Slide& s, const std::vector<Vertex>& next) {
        out.emplace_back(s, next);
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<TokenConfig> successors(const Graph& g, const TokenConfig& c) {
    std::vector<TokenConfig> out;
    for (auto& [s, next] : slide_moves(g, c)) out.push_back(std::move(next));
    return out;
}

bool is_frozen(const Graph& g, const TokenConfig& c) { return slide_moves(g, c).empty(); }

std::optional<TokenConfig> replay(const Graph& g, const MoveSeq& seq) {
    TokenConfig cur = seq.start;
    if (normalized(cur) != cur) return std::nullopt;
    for (Vertex v : cur)
        if (v >= g.n()) return std::nullopt;
    if (!is_independent(g, cur)) return std::nullopt;
    for (const Slide& s : seq.slides) {
        if (s.from >= g.n() || s.to >= g.n() || !g.adjacent(s.from, s.to)) return std::nullopt;
        auto it = std::lower_bound(cur.begin(), cur.end(), s.from);
        if (it == cur.end() || *it != s.from) return std::nullopt;
        cur.erase(it);
        for (Vertex t : cur)
            if (t == s.to || g.adjacent(t, s.to)) return std::nullopt;
        cur.insert(std::lower_bound(cur.begin(), cur.end(), s.to), s.to);
    }
    return cur;
}

std::optional<MoveSeq> ts_reachable(const Graph& g, const TokenConfig& i, const TokenConfig& j,
                                    std::size_t budget) {
    validate_config(g, i);
    validate_config(g, j);
    if (i.size() != j.size()) throw InvalidInput("source and target configurations differ in size");
    if (i == j) return MoveSeq{i, {}};
    const std::size_t k = i.size();
    StateStore store(k, budget);
    store.insert(i.data(), kNoParent);
    std::size_t hit = bfs(g, store, k, 0, &j);
    if (hit == kNoParent) return std::nullopt;
    std::vector<std::size_t> chain;
    for (std::size_t idx = hit; idx != kNoParent; idx = store.parent(idx)) chain.push_back(idx);
    std::reverse(chain.begin(), chain.end());
    MoveSeq seq{i, {}};
    for (std::size_t s = 1; s < chain.size(); ++s) {
        TokenConfig a = store.config(chain[s - 1]), b = store.config(chain[s]);
        TokenConfig from, to;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(from));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(to));
        seq.slides.push_back(Slide{from.at(0), to.at(0)});
    }
    return seq;
}

ConnVerdict ts_connected(const Graph& g, std::size_t k, std::size_t budget) {
    ConnVerdict v;
    v.total = count_k_independent_sets(g, k);
    if (v.total == 0) return v;
    if (k == 0) {
        v.kind = Connectivity::connected;
        v.reached = 1;
        return v;
    }
    TokenConfig seed;
    for_each_k_independent_set(g, k, [&](const TokenConfig& c) {
        seed = c;
        return true;
    });
    StateStore store(k, budget);
    store.insert(seed.data(), kNoParent);
    bfs(g, store, k, 0, nullptr);
    v.reached = store.size();
    if (v.reached == v.total) {
        v.kind = Connectivity::connected;
        return v;
    }
    v.kind = Connectivity::disconnected;
    for_each_k_independent_set(g, k, [&](const TokenConfig& c) {
        if (store.contains(c.data())) return false;
        v.witness = std::make_pair(seed, c);
        return true;
    });
    return v;
}

std::size_t component_count(const Graph& g, std::size_t k, std::size_t budget) {
    if (k == 0) return 1;
    StateStore store(k, budget);
    std::size_t comps = 0;
    for_each_k_independent_set(g, k, [&](const TokenConfig& c) {
        auto [idx, fresh] = store.insert(c.data(), kNoParent);
        if (fresh) {
            ++comps;
            bfs(g, store, k, idx, nullptr);
        }
        return false;
    });
    return comps;
}

std::vector<TokenConfig> component_of(const Graph& g, const TokenConfig& start, std::size_t budget) {
    validate_config(g, start);
    const std::size_t k = start.size();
    if (k == 0) return {start};
    StateStore store(k, budget);
    store.insert(start.data(), kNoParent);
    bfs(g, store, k, 0, nullptr);
    std::vector<TokenConfig> out;
    out.reserve(store.size());
    for (std::size_t idx = 0; idx < store.size(); ++idx) out.push_back(store.config(idx));
    return out;
}

}  // namespace tsr
