#include "homrec/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace homrec {

namespace {

constexpr int kMaxCanonOrder = 64;

// Working copy for the canonical-labelling search: one adjacency word per vertex.
struct Compact {
    int n = 0;
    uint64_t adj[kMaxCanonOrder];
    int col[kMaxCanonOrder];
};

Compact compact_of(const Graph& g, const std::vector<int>* colours) {
    if (g.order() > kMaxCanonOrder) throw std::invalid_argument("canonical_code: order cap is 64");
    Compact c;
    c.n = g.order();
    for (int v = 0; v < c.n; ++v) {
        uint64_t m = 0;
        for (int u = 0; u < c.n; ++u)
            if (u != v && g.adjacent(v, u)) m |= uint64_t(1) << u;
        c.adj[v] = m;
        c.col[v] = colours ? (*colours)[v] : 0;
    }
    return c;
}

// Ordered partition of the vertices: `order` lists vertices cell by cell,
// `cell_start` marks positions where a new cell begins.
struct Partition {
    int n = 0;
    int order[kMaxCanonOrder];
    uint64_t cell_start;  // bit i set iff position i starts a cell

    int cell_end(int begin) const {
        uint64_t later = cell_start >> 1 >> begin;  // starts strictly after `begin`
        if (later == 0) return n;
        return begin + 1 + std::countr_zero(later);
    }
};

// Equitable refinement: split cells by neighbour counts into other cells until stable.
void refine(const Compact& g, Partition& p) {
    bool changed = true;
    int cnt[kMaxCanonOrder];
    int tmp[kMaxCanonOrder];
    while (changed) {
        changed = false;
        for (int sb = 0; sb < p.n && !changed;) {  // splitter cell
            int se = p.cell_end(sb);
            uint64_t smask = 0;
            for (int i = sb; i < se; ++i) smask |= uint64_t(1) << p.order[i];
            for (int db = 0; db < p.n;) {  // cell to split
                int de = p.cell_end(db);
                if (de - db >= 2) {
                    int first = std::popcount(g.adj[p.order[db]] & smask);
                    bool uniform = true;
                    for (int i = db; i < de; ++i) {
                        cnt[i] = std::popcount(g.adj[p.order[i]] & smask);
                        if (cnt[i] != first) uniform = false;
                    }
                    if (!uniform) {
                        // stable sort the cell by count, then cut at count changes
                        int len = de - db;
                        for (int i = 0; i < len; ++i) tmp[i] = p.order[db + i];
                        std::stable_sort(tmp, tmp + len, [&](int a, int b) {
                            return std::popcount(g.adj[a] & smask) < std::popcount(g.adj[b] & smask);
                        });
                        for (int i = 0; i < len; ++i) p.order[db + i] = tmp[i];
                        for (int i = db + 1; i < de; ++i)
                            if (std::popcount(g.adj[p.order[i]] & smask) !=
                                std::popcount(g.adj[p.order[i - 1]] & smask))
                                p.cell_start |= uint64_t(1) << i;
                        changed = true;
                        break;
                    }
                }
                db = de;
            }
            if (!changed) sb = se;
        }
    }
}

Partition initial_partition(const Compact& g) {
    Partition p;
    p.n = g.n;
    for (int i = 0; i < g.n; ++i) p.order[i] = i;
    std::stable_sort(p.order, p.order + g.n, [&](int a, int b) { return g.col[a] < g.col[b]; });
    p.cell_start = g.n ? 1 : 0;
    for (int i = 1; i < g.n; ++i)
        if (g.col[p.order[i]] != g.col[p.order[i - 1]]) p.cell_start |= uint64_t(1) << i;
    return p;
}

std::string leaf_code(const Compact& g, const int* perm) {
    std::string code;
    code.reserve(1 + g.n + (g.n * (g.n - 1) / 2 + 7) / 8);
    code.push_back(static_cast<char>(g.n));
    for (int i = 0; i < g.n; ++i) {
        int c = g.col[perm[i]];
        if (c < 0 || c > 255) throw std::invalid_argument("canonical_code: colour ids must be 0..255");
        code.push_back(static_cast<char>(c));
    }
    int acc = 0, nb = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            acc = (acc << 1) | ((g.adj[perm[i]] >> perm[j]) & 1);
            if (++nb == 8) {
                code.push_back(static_cast<char>(acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) code.push_back(static_cast<char>(acc << (8 - nb)));
    return code;
}

struct DisjointSet {
    int parent[kMaxCanonOrder];
    void init(int n) { for (int i = 0; i < n; ++i) parent[i] = i; }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void merge(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

struct CanonResult {
    std::string code;
    int perm[kMaxCanonOrder];   // position -> vertex of the canonical labelling
    DisjointSet orbits;         // automorphism orbits (from discovered generators)
};

struct CanonSearch {
    const Compact& g;
    CanonResult res;
    bool have_best = false;
    std::string first_code;  // anchor leaf: automorphisms also appear as equal-to-first
    int first_perm[kMaxCanonOrder];
    std::vector<std::vector<int>> autos;  // discovered automorphism generators
    int prefix[kMaxCanonOrder];
    int prefix_len = 0;

    explicit CanonSearch(const Compact& gg) : g(gg) { res.orbits.init(gg.n); }

    void record_auto(const int* leaf, const int* base) {
        std::vector<int> a(g.n);
        bool identity = true;
        for (int i = 0; i < g.n; ++i) {
            a[leaf[i]] = base[i];
            if (leaf[i] != base[i]) identity = false;
        }
        if (identity) return;
        for (int v = 0; v < g.n; ++v) res.orbits.merge(v, a[v]);
        autos.push_back(std::move(a));
    }

    void at_leaf(const Partition& p) {
        std::string code = leaf_code(g, p.order);
        if (first_code.empty()) {
            first_code = code;
            std::copy(p.order, p.order + g.n, first_perm);
        } else if (code == first_code) {
            record_auto(p.order, first_perm);
        }
        if (!have_best || code < res.code) {
            res.code = std::move(code);
            std::copy(p.order, p.order + g.n, res.perm);
            have_best = true;
        } else if (code == res.code) {
            record_auto(p.order, res.perm);
        }
    }

    void run(Partition p) {
        refine(g, p);
        // find the first smallest non-singleton cell
        int best_b = -1, best_len = kMaxCanonOrder + 1;
        for (int b = 0; b < p.n;) {
            int e = p.cell_end(b);
            if (e - b >= 2 && e - b < best_len) { best_b = b; best_len = e - b; }
            b = e;
        }
        if (best_b < 0) {
            at_leaf(p);
            return;
        }
        int cell[kMaxCanonOrder];
        for (int i = 0; i < best_len; ++i) cell[i] = p.order[best_b + i];
        std::sort(cell, cell + best_len);
        uint64_t tried = 0;
        for (int ci = 0; ci < best_len; ++ci) {
            int v = cell[ci];
            bool skip = false;
            for (const auto& a : autos) {
                bool fixes_prefix = true;
                for (int k = 0; k < prefix_len && fixes_prefix; ++k)
                    if (a[prefix[k]] != prefix[k]) fixes_prefix = false;
                if (fixes_prefix && ((tried >> a[v]) & 1)) { skip = true; break; }
            }
            tried |= uint64_t(1) << v;
            if (skip) continue;
            // individualize v in front of its cell
            Partition q = p;
            int pos = best_b;
            for (int i = best_b; i < best_b + best_len; ++i)
                if (q.order[i] == v) pos = i;
            std::rotate(q.order + best_b, q.order + pos, q.order + pos + 1);
            q.cell_start |= uint64_t(1) << (best_b + 1);
            prefix[prefix_len++] = v;
            run(q);
            --prefix_len;
        }
    }
};

CanonResult canonical_form(const Compact& g) {
    CanonSearch s(g);
    if (g.n == 0) {
        s.res.code = std::string(1, '\0');
        s.have_best = true;
        return s.res;
    }
    s.run(initial_partition(g));
    return s.res;
}

// ---- exhaustive automorphism counting -------------------------------------

struct BigAdj {
    int n = 0, words = 0;
    std::vector<uint64_t> bits;
    const std::vector<int>* col = nullptr;
    bool at(int u, int v) const { return (bits[size_t(u) * words + (v >> 6)] >> (v & 63)) & 1; }
};

long long count_autos(const Graph& g, const std::vector<int>* colours, int pinned, uint64_t budget) {
    int n = g.order();
    if (n == 0) return 1;
    const int words = g.words_per_row();
    std::vector<uint64_t> adj(size_t(n) * words, 0);
    for (int v = 0; v < n; ++v)
        std::copy(g.row(v), g.row(v) + words, adj.begin() + size_t(v) * words);

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    // allowed[v] = bitset of still-possible images of v; propagated as vertices
    // get mapped so that both adjacency and non-adjacency are preserved. Picking
    // the most constrained vertex first keeps the tree close to the group size.
    std::vector<uint64_t> allowed(size_t(n) * words, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (deg[w] != deg[v]) continue;
            if (colours && (*colours)[w] != (*colours)[v]) continue;
            allowed[size_t(v) * words + (w >> 6)] |= uint64_t(1) << (w & 63);
        }
    if (pinned >= 0) {
        uint64_t* row = allowed.data() + size_t(pinned) * words;
        std::fill(row, row + words, 0);
        row[pinned >> 6] = uint64_t(1) << (pinned & 63);
    }

    std::vector<char> mapped(n, 0);
    long long count = 0;
    uint64_t nodes = 0;
    std::vector<uint64_t> stack_pool;  // one allowed-table snapshot per depth
    stack_pool.reserve(size_t(n) * n * words);

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) { ++count; return; }
        int v = -1;
        int best = n + 1;
        for (int u = 0; u < n; ++u) {
            if (mapped[u]) continue;
            int c = 0;
            const uint64_t* row = allowed.data() + size_t(u) * words;
            for (int i = 0; i < words; ++i) c += std::popcount(row[i]);
            if (c < best) { best = c; v = u; }
        }
        if (best == 0) return;

        size_t base = stack_pool.size();
        stack_pool.insert(stack_pool.end(), allowed.begin(), allowed.end());
        std::vector<uint64_t> row(allowed.begin() + size_t(v) * words,
                                  allowed.begin() + size_t(v) * words + words);
        mapped[v] = 1;
        for (int i = 0; i < words; ++i) {
            uint64_t bits = row[i];
            while (bits) {
                int w = (i << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                if (++nodes > budget) throw budget_exhausted();
                const uint64_t* nw = adj.data() + size_t(w) * words;
                bool dead = false;
                for (int u = 0; u < n && !dead; ++u) {
                    if (mapped[u] || u == v) continue;
                    uint64_t* au = allowed.data() + size_t(u) * words;
                    bool vu = (adj[size_t(v) * words + (u >> 6)] >> (u & 63)) & 1;
                    uint64_t left = 0;
                    for (int j = 0; j < words; ++j) {
                        uint64_t x = au[j] & (vu ? nw[j] : ~nw[j]);
                        if (j == (w >> 6)) x &= ~(uint64_t(1) << (w & 63));
                        au[j] = x;
                        left |= x;
                    }
                    if (!left) dead = true;
                }
                if (!dead) self(self, depth + 1);
                std::copy(stack_pool.begin() + base, stack_pool.begin() + base + allowed.size(),
                          allowed.begin());
            }
        }
        mapped[v] = 0;
        stack_pool.resize(base);
    };

    rec(rec, 0);
    return count;
}

// ---- canonical augmentation ------------------------------------------------

// Accept a child (parent + new last vertex) iff the new vertex lies in the same
// automorphism orbit as the vertex in the last canonical position.
bool accept_child(const Compact& child, CanonResult& cr) {
    int last = cr.perm[child.n - 1];
    return cr.orbits.find(last) == cr.orbits.find(child.n - 1);
}

Compact extend(const Compact& parent, uint64_t nbrs, int colour) {
    Compact c = parent;
    int v = c.n++;
    c.adj[v] = nbrs;
    c.col[v] = colour;
    for (int u = 0; u < v; ++u)
        if ((nbrs >> u) & 1) c.adj[u] |= uint64_t(1) << v;
    return c;
}

Graph to_graph(const Compact& c) {
    Graph g(c.n);
    for (int v = 0; v < c.n; ++v)
        for (int u = v + 1; u < c.n; ++u)
            if ((c.adj[v] >> u) & 1) g.add_edge(v, u);
    return g;
}

Compact compact_of_coloured(const ColouredGraph& g) { return compact_of(g.graph, &g.colours); }

// mask_for(colour) limits which parent vertices the new vertex may attach to;
// neighbourhoods are enumerated as submasks in increasing order, which reduces
// to plain 0..2^m-1 iteration when the mask is full.
template <typename Emit>
void children_of(const Compact& parent, const std::vector<int>& palette, const Emit& emit,
                 uint64_t* attempts, const std::function<uint64_t(int)>* mask_for = nullptr) {
    int m = parent.n;
    if (m >= kMaxCanonOrder) throw std::invalid_argument("augmentation: order cap");
    std::unordered_set<std::string> seen;
    uint64_t top = m >= 63 ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);
    for (int colour : palette) {
        uint64_t mask = mask_for ? ((*mask_for)(colour) & top) : top;
        for (uint64_t S = 0;;) {
            if (attempts) {
                if (*attempts == 0) throw budget_exhausted();
                --*attempts;
            }
            Compact child = extend(parent, S, colour);
            if (emit.pre(child)) {  // cheap monotone filter before canonizing
                CanonResult cr = canonical_form(child);
                // accept before dedup: productions sharing a canonical code can
                // differ on the accept test, and only accepted ones may be kept
                if (accept_child(child, cr) && seen.insert(cr.code).second) emit.out(child);
            }
            S = (S - mask) & mask;
            if (S == 0) break;
        }
    }
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    Compact c = compact_of(g, nullptr);
    return canonical_form(c).code;
}

CanonicalCode canonical_code(const ColouredGraph& g) {
    if (static_cast<int>(g.colours.size()) != g.order())
        throw std::invalid_argument("canonical_code: colour array size mismatch");
    Compact c = compact_of_coloured(g);
    return canonical_form(c).code;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

bool isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
    if (a.order() != b.order()) return false;
    return canonical_code(a) == canonical_code(b);
}

long long aut_count(const Graph& g, uint64_t node_budget) {
    return count_autos(g, nullptr, -1, node_budget);
}

long long aut_count(const ColouredGraph& g, uint64_t node_budget) {
    if (static_cast<int>(g.colours.size()) != g.order())
        throw std::invalid_argument("aut_count: colour array size mismatch");
    return count_autos(g.graph, &g.colours, -1, node_budget);
}

long long pinned_aut_count(const Graph& g, int pinned, uint64_t node_budget) {
    if (pinned < 0 || pinned >= g.order()) throw std::invalid_argument("pinned_aut_count: bad vertex");
    return count_autos(g, nullptr, pinned, node_budget);
}

std::vector<int> automorphism_orbits(const Graph& g) {
    Compact c = compact_of(g, nullptr);
    CanonResult r = canonical_form(c);
    std::vector<int> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = r.orbits.find(v);
    return out;
}

namespace {

struct PlainEmit {
    const std::function<bool(const Graph&)>* keep;
    std::vector<Compact>* sink;
    bool pre(const Compact& c) const {
        if (!keep || !*keep) return true;
        return (*keep)(to_graph(c));
    }
    void out(const Compact& c) const { sink->push_back(c); }
};

void enumerate_rec(const Compact& g, int n, bool exactly, const std::function<bool(const Graph&)>& visit,
                   bool& stop) {
    if (stop) return;
    if (!exactly || g.n == n) {
        if (!visit(to_graph(g))) { stop = true; return; }
    }
    if (g.n == n) return;
    std::vector<Compact> kids;
    PlainEmit em{nullptr, &kids};
    children_of(g, {0}, em, nullptr);
    for (const auto& k : kids) {
        enumerate_rec(k, n, exactly, visit, stop);
        if (stop) return;
    }
}

}  // namespace

void enumerate_nonisomorphic(int n, bool exactly, const std::function<bool(const Graph&)>& visit) {
    if (n < 0 || n > 9) throw std::invalid_argument("enumerate_nonisomorphic: supported range is 0..9");
    Compact root;
    root.n = 0;
    bool stop = false;
    enumerate_rec(root, n, exactly, visit, stop);
}

std::vector<Graph> enumerate_nonisomorphic(int n, bool exactly) {
    std::vector<Graph> out;
    enumerate_nonisomorphic(n, exactly, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

void enumerate_nonisomorphic_parallel(int n, bool exactly, int threads,
                                      const std::function<void(int, const Graph&)>& visit) {
    if (n < 0 || n > 9) throw std::invalid_argument("enumerate_nonisomorphic: supported range is 0..9");
    if (threads < 1) threads = 1;
    // seeds: subtree roots at a shallow level; each worker expands whole subtrees
    int seed_level = std::min(n, 5);
    std::vector<Graph> seeds = [&] {
        std::vector<Graph> s;
        enumerate_nonisomorphic(seed_level, true, [&](const Graph& g) {
            s.push_back(g);
            return true;
        });
        return s;
    }();
    if (!exactly && seed_level > 0) {
        // stream the shallow part serially first (orders < seed level)
        enumerate_nonisomorphic(seed_level - 1, false,
                                [&](const Graph& g) { visit(-1, g); return true; });
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= seeds.size()) break;
            Compact c = compact_of(seeds[i], nullptr);
            bool stop = false;
            enumerate_rec(c, n, exactly, [&](const Graph& g) {
                visit(static_cast<int>(i), g);
                return true;
            }, stop);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::vector<Graph> augmentation_children(const std::vector<Graph>& parents,
                                         const std::function<bool(const Graph&)>& keep,
                                         uint64_t* attempts) {
    std::vector<Graph> out;
    for (const auto& p : parents) {
        std::vector<Compact> kids;
        PlainEmit em{keep ? &keep : nullptr, &kids};
        children_of(compact_of(p, nullptr), {0}, em, attempts);
        for (const auto& k : kids) out.push_back(to_graph(k));
    }
    return out;
}

void augmentation_candidates(const std::vector<ColouredGraph>& parents,
                             const std::vector<int>& palette,
                             const std::function<bool(const ColouredGraph&)>& keep,
                             const std::function<bool(const ColouredGraph&)>& visit,
                             uint64_t* attempts,
                             const std::function<uint64_t(const ColouredGraph&, int)>& allowed_nbrs) {
    for (const auto& p : parents) {
        if (static_cast<int>(p.colours.size()) != p.order())
            throw std::invalid_argument("augmentation_candidates: colour array size mismatch");
        Compact parent = compact_of_coloured(p);
        int m = parent.n;
        if (m >= kMaxCanonOrder) throw std::invalid_argument("augmentation: order cap");
        uint64_t top = m >= 63 ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);
        for (int colour : palette) {
            uint64_t mask = allowed_nbrs ? (allowed_nbrs(p, colour) & top) : top;
            for (uint64_t S = 0;;) {
                if (attempts) {
                    if (*attempts == 0) throw budget_exhausted();
                    --*attempts;
                }
                Compact child = extend(parent, S, colour);
                ColouredGraph cg;
                cg.graph = to_graph(child);
                cg.colours.assign(child.col, child.col + child.n);
                if ((!keep || keep(cg)) && !visit(cg)) return;
                S = (S - mask) & mask;
                if (S == 0) break;
            }
        }
    }
}

std::vector<ColouredGraph> augmentation_children(const std::vector<ColouredGraph>& parents,
                                                 const std::vector<int>& palette,
                                                 const std::function<bool(const ColouredGraph&)>& keep,
                                                 uint64_t* attempts,
                                                 const std::function<uint64_t(const ColouredGraph&, int)>& allowed_nbrs) {
    std::vector<ColouredGraph> out;
    struct ColEmit {
        const std::function<bool(const ColouredGraph&)>* keep;
        std::vector<ColouredGraph>* sink;
        static ColouredGraph unpack(const Compact& c) {
            ColouredGraph cg;
            cg.graph = to_graph(c);
            cg.colours.assign(c.col, c.col + c.n);
            return cg;
        }
        bool pre(const Compact& c) const {
            if (!keep || !*keep) return true;
            return (*keep)(unpack(c));
        }
        void out(const Compact& c) const { sink->push_back(unpack(c)); }
    };
    for (const auto& p : parents) {
        if (static_cast<int>(p.colours.size()) != p.order())
            throw std::invalid_argument("augmentation_children: colour array size mismatch");
        ColEmit em{keep ? &keep : nullptr, &out};
        std::function<uint64_t(int)> mask_for;
        if (allowed_nbrs) mask_for = [&](int colour) { return allowed_nbrs(p, colour); };
        children_of(compact_of_coloured(p), palette, em, attempts,
                    allowed_nbrs ? &mask_for : nullptr);
    }
    return out;
}

}  // namespace homrec
