#include "homrec/invariants.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

namespace homrec {

namespace {

// k-colourability, vertices taken in static degree-descending order; a vertex may
// only open colour class (max used so far)+1, which kills colour-permutation symmetry.
bool colourable(const Graph& g, int k, std::vector<int>& order) {
    int n = g.order();
    std::vector<int> colour(n, -1);
    auto rec = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        int lim = std::min(k, used + 1);
        for (int c = 0; c < lim; ++c) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (colour[u] == c && g.adjacent(v, u)) ok = false;
            if (!ok) continue;
            colour[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            colour[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
    int n = g.order();
    if (n > 30) throw std::invalid_argument("chromatic_number: exact search capped at 30 vertices");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 2;; ++k)
        if (colourable(g, k, order)) return k;
}

std::optional<int> odd_girth(const Graph& g) {
    int n = g.order();
    int best = -1;
    // BFS over (vertex, parity) states from every start; an odd closed walk through
    // the start shows up as a finite distance to (start, odd)
    for (int s = 0; s < n; ++s) {
        std::vector<std::array<int, 2>> dist(n, {-1, -1});
        std::queue<std::pair<int, int>> q;
        dist[s][0] = 0;
        q.emplace(s, 0);
        while (!q.empty()) {
            auto [v, p] = q.front();
            q.pop();
            for (int u = 0; u < n; ++u) {
                if (!g.adjacent(v, u)) continue;
                int np = p ^ 1;
                if (dist[u][np] == -1) {
                    dist[u][np] = dist[v][p] + 1;
                    q.emplace(u, np);
                }
            }
        }
        if (dist[s][1] != -1 && (best == -1 || dist[s][1] < best)) best = dist[s][1];
    }
    if (best == -1) return std::nullopt;
    return best;
}

}  // namespace homrec
