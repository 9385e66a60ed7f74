#include "homrec/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "homrec/canonical.hpp"

namespace homrec {

namespace {

// Shared backtracking core. `forced[v]` pins an F-vertex to a G-vertex (-1 free),
// `fcol/gcol` demand equal colours, `injective` demands globally distinct images,
// `surjective` demands every G vertex hit.
struct MapCounter {
    const Graph& F;
    const Graph& G;
    const std::vector<int>* fcol = nullptr;
    const std::vector<int>* gcol = nullptr;
    std::vector<int> forced;
    bool injective = false;
    bool surjective = false;

    std::vector<int> order;        // F vertices, component by component, BFS within
    std::vector<std::vector<int>> earlier_nbrs;  // per order position
    std::vector<int> img;
    std::vector<char> used;
    int covered = 0;

    Int run() {
        int nf = F.order(), ng = G.order();
        if (surjective && nf < ng) return 0;  // pigeonhole
        if (injective && nf > ng) return 0;
        build_order();
        img.assign(nf, -1);
        used.assign(ng, 0);
        covered = 0;
        Int total = 0;
        count(0, total);
        return total;
    }

    void build_order() {
        int nf = F.order();
        order.clear();
        std::vector<char> seen(nf, 0);
        for (int s = 0; s < nf; ++s) {
            if (seen[s]) continue;
            // BFS from the highest-degree unseen vertex of this component
            int root = s;
            // find the component of s first
            std::vector<int> comp, queue{s};
            seen[s] = 1;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                comp.push_back(v);
                for (int u = 0; u < nf; ++u)
                    if (!seen[u] && F.adjacent(v, u)) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
            }
            for (int v : comp)
                if (F.degree(v) > F.degree(root)) root = v;
            std::vector<char> added(nf, 0);
            std::vector<int> bfs{root};
            added[root] = 1;
            for (size_t qi = 0; qi < bfs.size(); ++qi) {
                int v = bfs[qi];
                order.push_back(v);
                for (int u = 0; u < nf; ++u)
                    if (!added[u] && F.adjacent(v, u)) {
                        added[u] = 1;
                        bfs.push_back(u);
                    }
            }
        }
        earlier_nbrs.assign(order.size(), {});
        std::vector<int> pos(nf, -1);
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        for (size_t i = 0; i < order.size(); ++i)
            for (int u = 0; u < nf; ++u)
                if (F.adjacent(order[i], u) && pos[u] < static_cast<int>(i)) earlier_nbrs[i].push_back(u);
    }

    bool feasible(int depth, int v, int w) const {
        if (w < 0 || w >= G.order()) return false;
        if (fcol && (*fcol)[v] != (*gcol)[w]) return false;
        if (injective && used[w]) return false;
        if (!forced.empty() && forced[v] >= 0 && forced[v] != w) return false;
        for (int u : earlier_nbrs[depth])
            if (!G.adjacent(w, img[u])) return false;
        return true;
    }

    void count(int depth, Int& total) {
        int nf = F.order(), ng = G.order();
        if (depth == nf) {
            if (!surjective || covered == ng) ++total;
            return;
        }
        if (surjective && (nf - depth) < (ng - covered)) return;  // cannot cover the rest
        int v = order[depth];
        if (!forced.empty() && forced[v] >= 0) {
            if (feasible(depth, v, forced[v])) descend(depth, v, forced[v], total);
            return;
        }
        for (int w = 0; w < ng; ++w)
            if (feasible(depth, v, w)) descend(depth, v, w, total);
    }

    void descend(int depth, int v, int w, Int& total) {
        img[v] = w;
        bool newly = !used[w];
        used[w] = 1;
        if (newly) ++covered;
        count(depth + 1, total);
        if (newly) {
            used[w] = 0;
            --covered;
        }
        img[v] = -1;
    }
};

// hom over a possibly disconnected pattern: product of per-component counts.
Int hom_product(const Graph& F, const Graph& G, const std::vector<int>* fcol,
                const std::vector<int>* gcol, const std::vector<int>& forced) {
    if (F.order() == 0) return 1;
    Int total = 1;
    for (const auto& comp : connected_components(F)) {
        Graph Fc = induced_subgraph(F, comp);
        std::vector<int> ccol, cforced(comp.size(), -1);
        if (fcol) {
            ccol.reserve(comp.size());
            for (int v : comp) ccol.push_back((*fcol)[v]);
        }
        if (!forced.empty())
            for (size_t i = 0; i < comp.size(); ++i) cforced[i] = forced[comp[i]];
        MapCounter mc{Fc, G};
        if (fcol) {
            mc.fcol = &ccol;
            mc.gcol = gcol;
        }
        bool any_forced = std::any_of(cforced.begin(), cforced.end(), [](int x) { return x >= 0; });
        if (any_forced) mc.forced = cforced;
        total *= mc.run();
        if (total == 0) return 0;
    }
    return total;
}

std::vector<int> forced_from_labels(const LabelledGraph& F, const LabelledGraph& G) {
    std::vector<int> forced(F.order(), -1);
    for (const auto& [label, fv] : F.labels) {
        auto it = G.labels.find(label);
        if (it == G.labels.end())
            throw std::invalid_argument("labelled counting: pattern label missing from host");
        if (forced[fv] >= 0 && forced[fv] != it->second) {
            // two labels pin the same pattern vertex to different hosts: no map exists;
            // signal with an impossible image that feasible() rejects
            forced[fv] = -2;
        } else if (forced[fv] != -2) {
            forced[fv] = it->second;
        }
    }
    return forced;
}

bool has_contradiction(const std::vector<int>& forced) {
    return std::any_of(forced.begin(), forced.end(), [](int x) { return x == -2; });
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> q{s};
        seen[s] = 1;
        for (size_t i = 0; i < q.size(); ++i)
            for (int u = 0; u < n; ++u)
                if (!seen[u] && g.adjacent(q[i], u)) {
                    seen[u] = 1;
                    q.push_back(u);
                }
        std::sort(q.begin(), q.end());
        comps.push_back(std::move(q));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Int hom_count(const Graph& F, const Graph& G) { return hom_product(F, G, nullptr, nullptr, {}); }

Int hom_count(const ColouredGraph& F, const ColouredGraph& G) {
    return hom_product(F.graph, G.graph, &F.colours, &G.colours, {});
}

Int hom_count(const LabelledGraph& F, const LabelledGraph& G) {
    auto forced = forced_from_labels(F, G);
    if (has_contradiction(forced)) return 0;
    return hom_product(F.graph, G.graph, nullptr, nullptr, forced);
}

Int injective_hom_count(const Graph& F, const Graph& G) {
    if (F.order() == 0) return 1;
    MapCounter mc{F, G};
    mc.injective = true;
    return mc.run();
}

Int injective_hom_count(const ColouredGraph& F, const ColouredGraph& G) {
    if (F.order() == 0) return 1;
    MapCounter mc{F.graph, G.graph};
    mc.fcol = &F.colours;
    mc.gcol = &G.colours;
    mc.injective = true;
    return mc.run();
}

Int injective_hom_count(const LabelledGraph& F, const LabelledGraph& G) {
    if (F.order() == 0) return 1;
    auto forced = forced_from_labels(F, G);
    if (has_contradiction(forced)) return 0;
    MapCounter mc{F.graph, G.graph};
    mc.injective = true;
    if (std::any_of(forced.begin(), forced.end(), [](int x) { return x >= 0; })) mc.forced = forced;
    return mc.run();
}

Int sub_count(const Graph& F, const Graph& G) {
    Int inj = injective_hom_count(F, G);
    Int aut = aut_count(F);
    return inj / aut;  // exact: injective image sets are counted |Aut(F)| times each
}

Int sub_count(const ColouredGraph& F, const ColouredGraph& G) {
    Int inj = injective_hom_count(F, G);
    Int aut = aut_count(F);
    return inj / aut;
}

Int indsub_count(const Graph& F, const Graph& G) {
    int k = F.order(), n = G.order();
    if (k > n) return 0;
    if (k == 0) return 1;
    CanonicalCode target = canonical_code(F);
    long long fedges = F.edge_count();
    Int total = 0;
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int idx, int start) -> void {
        if (idx == k) {
            Graph H = induced_subgraph(G, pick);
            if (H.edge_count() == fedges && canonical_code(H) == target) ++total;
            return;
        }
        for (int v = start; v <= n - (k - idx); ++v) {
            pick[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

Int surj_count(const Graph& F, const Graph& G) {
    if (F.order() == 0) return G.order() == 0 ? 1 : 0;
    if (G.order() == 0) return 0;
    MapCounter mc{F, G};
    mc.surjective = true;
    return mc.run();
}

Int hom_via_sub_decomposition(const Graph& F, const Graph& G) {
    Int total = 0;
    enumerate_nonisomorphic(F.order(), true, [&](const Graph& H) {
        Int s = sub_count(F, H);
        if (s != 0) total += s * indsub_count(H, G);
        return true;
    });
    return total;
}

Int hom_via_indsub_decomposition(const Graph& F, const Graph& G) {
    int k = F.order(), n = G.order();
    if (n <= k)
        throw std::invalid_argument("hom_via_indsub_decomposition: host must be larger than pattern");
    Int total = 0;
    enumerate_nonisomorphic(k, false, [&](const Graph& H) {
        int m = H.order();
        Int term = hom_count(F, H) * indsub_count(H, G) * binomial(Int(n - m - 1), k - m);
        if ((k - m) % 2 == 1) term = -term;
        total += term;
        return true;
    });
    return total;
}

}  // namespace homrec
