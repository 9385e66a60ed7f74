#include "homrec/construct.hpp"

#include "homrec/counting.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace homrec {

namespace {

constexpr long long kMaxBuiltOrder = 20000;

Graph clique_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

const std::map<int, int>& GammaTable::known() {
    static const std::map<int, int> table{{1, 1}, {2, 3}};
    return table;
}

const std::map<int, int>& GammaTable::conjectural() {
    static const std::map<int, int> table{{3, 5}};
    return table;
}

Int decomposition_sum(const BinomialDecomposition& d) {
    Int sum = 0;
    for (long long a : d.parts) sum += binomial(Int(a), static_cast<unsigned>(d.k));
    return sum;
}

BinomialDecomposition kamke_decompose(const Int& target, int k, int part_cap,
                                      long long value_cap) {
    if (k < 1) throw std::invalid_argument("kamke_decompose: k must be positive");
    if (target < 0) throw std::invalid_argument("kamke_decompose: negative target");
    if (part_cap <= 0) {
        auto it = GammaTable::known().find(k);
        if (it != GammaTable::known().end()) {
            part_cap = it->second;
        } else {
            int lg = 0;
            while ((1 << lg) < k + 2) ++lg;
            part_cap = 2 * k * lg;
        }
    }

    BinomialDecomposition out;
    out.k = k;
    if (target == 0) return out;

    auto binom = [k](long long a) { return binomial(Int(a), static_cast<unsigned>(k)); };
    std::vector<long long> parts;
    std::function<bool(const Int&, int, long long)> dfs = [&](const Int& rem, int left,
                                                              long long maxval) -> bool {
        if (left == 0) return rem == 0;
        if (rem < left) return false;  // every part contributes at least 1
        long long hi = static_cast<long long>(
            search_last_leq(Int(k), [&](const Int& a) { return binomial(a, unsigned(k)); }, rem));
        hi = std::min(hi, maxval);
        for (long long a = hi; a >= k; --a) {
            Int val = binom(a);
            if (val * left < rem) break;  // smaller values cannot reach rem either
            parts.push_back(a);
            if (dfs(rem - val, left - 1, a)) return true;
            parts.pop_back();
        }
        return false;
    };

    long long top = value_cap < 0 ? std::numeric_limits<long long>::max() : value_cap;
    for (int depth = 1; depth <= part_cap; ++depth) {
        parts.clear();
        if (dfs(target, depth, top)) {
            out.parts = parts;
            return out;
        }
    }
    throw std::runtime_error("kamke_decompose: " + to_string(target) +
                             " admits no decomposition into at most " + std::to_string(part_cap) +
                             " binomials C(a," + std::to_string(k) + ")" +
                             (value_cap >= 0 ? " with parts at most " + std::to_string(value_cap)
                                             : std::string()));
}

CliqueConstruction construct_clique_graph_report(long long n, int k, const Int& h) {
    if (k < 2) throw std::invalid_argument("construct_clique_graph: k must be at least 2");
    if (n < 1) throw std::invalid_argument("construct_clique_graph: n must be positive");
    if (h < 0 || h > binomial(Int(n), static_cast<unsigned>(k)))
        throw std::invalid_argument("construct_clique_graph: h must lie in [0, C(n,k)]");

    auto gamma = GammaTable::known().find(k - 1);
    bool guaranteed = gamma != GammaTable::known().end();

    CliqueConstruction result;
    result.parts.k = k - 1;
    if (h > 0) {
        // minimal n' with h <= C(n', k), then split off the full clique below it
        long long nprime = static_cast<long long>(search_last_leq(
                               Int(0), [&](const Int& x) { return binomial(x, unsigned(k)); },
                               h - 1)) +
                           1;
        result.core_order = nprime - 1;
        Int hprime = h - binomial(Int(result.core_order), static_cast<unsigned>(k));
        if (hprime > 0) result.parts = kamke_decompose(hprime, k - 1, 0, result.core_order);
    }

    long long t = static_cast<long long>(result.parts.parts.size());
    long long total = guaranteed ? n + gamma->second - 1 : n + t - 1;
    if (total < result.core_order + t)
        throw std::runtime_error("construct_clique_graph: order budget violated");
    if (total > kMaxBuiltOrder)
        throw std::invalid_argument("construct_clique_graph: output graph too large");

    Graph g(static_cast<int>(total));
    for (int u = 0; u < result.core_order; ++u)
        for (int v = u + 1; v < result.core_order; ++v) g.add_edge(u, v);
    int fresh = static_cast<int>(result.core_order);
    for (long long a : result.parts.parts) {
        for (int u = 0; u < a; ++u) g.add_edge(fresh, u);
        ++fresh;
    }
    result.graph = std::move(g);
    result.gamma_guaranteed = guaranteed;
    return result;
}

Graph construct_clique_graph(long long n, int k, const Int& h) {
    return construct_clique_graph_report(n, k, h).graph;
}

DegreeMultiset multiset_initial(int p) {
    if (p < 0) throw std::invalid_argument("multiset_initial: negative p");
    DegreeMultiset d;
    d.p = p;
    d.entries.assign(p, 2);
    d.entries.push_back(1);
    d.entries.push_back(1);
    return d;
}

DegreeMultiset multiset_split(const DegreeMultiset& d, int c) {
    if (c < 2) throw std::invalid_argument("multiset_split: split value must be at least 2");
    if (std::count(d.entries.begin(), d.entries.end(), c) < 2)
        throw std::invalid_argument("multiset_split: value " + std::to_string(c) +
                                    " must occur at least twice");
    DegreeMultiset out;
    out.p = d.p;
    out.entries = d.entries;
    for (int wanted : {c, c}) {
        auto it = std::find(out.entries.begin(), out.entries.end(), wanted);
        out.entries.erase(it);
    }
    out.entries.push_back(c + 1);
    out.entries.push_back(c - 1);
    std::sort(out.entries.rbegin(), out.entries.rend());
    return out;
}

DegreeMultiset replay_chain(const SplitChain& chain) {
    DegreeMultiset d = multiset_initial(chain.p);
    for (int c : chain.steps) d = multiset_split(d, c);
    return d;
}

long long staircase_length(int p) {
    if (p < 0) throw std::invalid_argument("staircase_length: negative p");
    long long x = 1;
    while ((x + 1) * x / 2 <= p) ++x;  // largest x with C(x,2) <= p
    return x * (x - 1) * (x - 2) / 6;  // C(x,3)
}

SplitChain staircase_chain(int p, long long steps) {
    if (steps < 0) throw std::invalid_argument("staircase_chain: negative step count");
    if (steps > staircase_length(p))
        throw std::invalid_argument("staircase_chain: only " + std::to_string(staircase_length(p)) +
                                    " steps are constructible for p=" + std::to_string(p));
    SplitChain chain;
    chain.p = p;
    // climb {x,...,2,1s} to {x+1,...,2,1s}: cascades of splits at 2..v consume one
    // spare 2 each and raise the ladder one rung, for v = x down to 2
    for (int x = 2; static_cast<long long>(chain.steps.size()) < steps; ++x)
        for (int v = x; v >= 2; --v)
            for (int c = 2; c <= v; ++c) {
                chain.steps.push_back(c);
                if (static_cast<long long>(chain.steps.size()) == steps) return chain;
            }
    return chain;
}

Graph tree_from_degrees(const SplitChain& chain) {
    DegreeMultiset current = multiset_initial(chain.p);
    int n = chain.p + 2;
    Graph tree(n);
    for (int v = 0; v + 1 < n; ++v) tree.add_edge(v, v + 1);

    for (int c : chain.steps) {
        DegreeMultiset next = multiset_split(current, c);  // validates the step

        int v1 = -1, v2 = -1;
        for (int v = 0; v < n && v2 < 0; ++v)
            if (tree.degree(v) == c) (v1 < 0 ? v1 : v2) = v;
        if (v2 < 0) throw std::runtime_error("tree_from_degrees: tree degrees out of sync");

        // vertices on the v1..v2 path, by parent chase from a BFS rooted at v1
        std::vector<int> parent(n, -1);
        std::queue<int> queue;
        queue.push(v1);
        parent[v1] = v1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w = 0; w < n; ++w)
                if (tree.adjacent(u, w) && parent[w] < 0) {
                    parent[w] = u;
                    queue.push(w);
                }
        }
        std::vector<char> on_path(n, 0);
        for (int u = v2;; u = parent[u]) {
            on_path[u] = 1;
            if (u == v1) break;
        }

        int v3 = -1;
        for (int w = 0; w < n && v3 < 0; ++w)
            if (tree.adjacent(v1, w) && !on_path[w] && !tree.adjacent(v2, w)) v3 = w;
        if (v3 < 0) throw std::runtime_error("tree_from_degrees: no off-path edge to move");

        tree.remove_edge(v1, v3);  // v1 drops to c-1, v2 rises to c+1
        tree.add_edge(v2, v3);
        current = std::move(next);
    }
    return tree;
}

Int complement_triangle_formula(const Graph& g) {
    int n = g.order();
    Int sum_deg_pairs = 0;
    for (int v = 0; v < n; ++v) sum_deg_pairs += binomial(Int(g.degree(v)), 2);
    return binomial(Int(n), 3) - Int(g.edge_count()) * (n - 2) + sum_deg_pairs -
           sub_count(clique_graph(3), g);
}

Int forest_complement_count(long long p, long long n) {
    if (p < 0 || p > n - 1)
        throw std::invalid_argument("forest_complement_count: p must lie in [0, n-1]");
    return binomial(Int(n + 1), 3) - Int(p + 1) * (n - 1) + p;
}

TriangleConstruction construct_triangle_graph_report(long long n, const Int& h) {
    if (n < 130) throw std::invalid_argument("construct_triangle_graph: n must be at least 130");
    if (n + 1 > kMaxBuiltOrder)
        throw std::invalid_argument("construct_triangle_graph: output graph too large");
    if (h < 0 || h > binomial(Int(n), 3))
        throw std::invalid_argument("construct_triangle_graph: h must lie in [0, C(n,3)]");

    TriangleConstruction result;
    if (h <= binomial(Int(n - 1), 3)) {
        // the clique route lands on (n-1) + 3 - 1 = n+1 vertices exactly
        result.graph = construct_clique_graph(n - 1, 3, h);
        result.via_clique = true;
        return result;
    }

    // largest p with forest_complement_count(p, n) >= h, then walk up from the
    // band floor: every split adds exactly one complement triangle
    long long pstar = static_cast<long long>((binomial(Int(n + 1), 3) - (n - 1) - h) / (n - 2));
    long long steps = static_cast<long long>(h - forest_complement_count(pstar + 1, n));
    if (steps < 1 || steps > n - 2 || forest_complement_count(pstar, n) < h)
        throw std::runtime_error("construct_triangle_graph: band selection out of range");

    Graph tree = tree_from_degrees(staircase_chain(static_cast<int>(pstar + 1), steps));
    Graph forest(static_cast<int>(n + 1));
    for (auto [u, v] : tree.edges()) forest.add_edge(u, v);
    result.graph = complement(forest);
    result.via_clique = false;
    result.p = pstar;
    result.steps = steps;
    return result;
}

Graph construct_triangle_graph(long long n, const Int& h) {
    return construct_triangle_graph_report(n, h).graph;
}

int longest_chain_length(int p) {
    if (p < 0 || p > 10)
        throw std::invalid_argument("longest_chain_length: p must lie in [0, 10]");
    std::map<std::vector<int>, int> memo;
    std::function<int(const std::vector<int>&)> rec = [&](const std::vector<int>& entries) -> int {
        auto it = memo.find(entries);
        if (it != memo.end()) return it->second;
        int best = 1;
        DegreeMultiset d;
        d.entries = entries;
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i > 0 && entries[i] == entries[i - 1]) continue;
            int c = entries[i];
            if (c < 2 || std::count(entries.begin(), entries.end(), c) < 2) continue;
            best = std::max(best, 1 + rec(multiset_split(d, c).entries));
        }
        memo[entries] = best;
        return best;
    };
    return rec(multiset_initial(p).entries);
}

}  // namespace homrec
