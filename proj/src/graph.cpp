#include "homrec/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace homrec {

void Graph::add_edge(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t(1) << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t(1) << (u & 63));
}

int Graph::degree(int u) const {
    int d = 0;
    const uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int order, const std::vector<std::pair<int, int>>& edge_list) {
    if (order < 0) throw std::invalid_argument("make_graph: negative order");
    Graph g(order);
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("make_graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("make_graph: loop edge rejected");
        if (g.adjacent(u, v)) throw std::invalid_argument("make_graph: duplicate edge rejected");
        g.add_edge(u, v);
    }
    return g;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.order();
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (!seen.insert(v).second) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    }
    int m = static_cast<int>(vertices.size());
    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    return h;
}

std::vector<std::vector<int>> kneser_vertex_sets(int r, int s) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    // lexicographic enumeration of r-subsets of {0..s-1}
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            sets.push_back(cur);
            return;
        }
        for (int x = start; x < s; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return sets;
}

Graph kneser(int r, int s) {
    if (r < 1 || 2 * r >= s) throw std::invalid_argument("kneser: need 1 <= r < s/2");
    auto sets = kneser_vertex_sets(r, s);
    // each subset as a bitmask of {0..s-1} for the disjointness test
    std::vector<uint64_t> masks;
    masks.reserve(sets.size());
    for (auto& v : sets) {
        uint64_t m = 0;
        for (int x : v) m |= uint64_t(1) << x;
        masks.push_back(m);
    }
    int n = static_cast<int>(sets.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((masks[i] & masks[j]) == 0) g.add_edge(i, j);
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n > 258047) throw std::invalid_argument("emit_graph6: order too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    // upper triangle, column by column
    int value = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((value << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("parse_graph6: empty input");

    size_t pos = 0;
    long long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("parse_graph6: orders beyond 258047 unsupported");
        if (s.size() < 4) throw std::invalid_argument("parse_graph6: truncated order");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = static_cast<unsigned char>(s[i]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("parse_graph6: bad order byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(s[0]) - 63;
        if (n < 0 || n > 62) throw std::invalid_argument("parse_graph6: bad order byte");
        pos = 1;
    }

    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != bytes_needed)
        throw std::invalid_argument("parse_graph6: wrong length");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    auto next_bit = [&]() {
        int c = static_cast<unsigned char>(s[pos + bit / 6]) - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("parse_graph6: bad data byte");
        int v = (c >> (5 - bit % 6)) & 1;
        ++bit;
        return v;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit()) g.add_edge(i, j);
    while (bit < bytes_needed * 6)
        if (next_bit()) throw std::invalid_argument("parse_graph6: nonzero padding");
    return g;
}

}  // namespace homrec
