#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homrec {

// Simple undirected graph on vertices 0..n-1, adjacency kept as packed bit rows.
class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }

    int degree(int u) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

struct ColouredGraph {
    Graph graph;
    std::vector<int> colours;  // colours[v], size == order

    int order() const { return graph.order(); }
    bool operator==(const ColouredGraph& o) const { return graph == o.graph && colours == o.colours; }
};

struct LabelledGraph {
    Graph graph;
    std::map<int, int> labels;  // label id -> vertex carrying it

    int order() const { return graph.order(); }
    bool operator==(const LabelledGraph& o) const { return graph == o.graph && labels == o.labels; }
};

// Builds a graph, rejecting out-of-range endpoints, loops and duplicate edges.
Graph make_graph(int order, const std::vector<std::pair<int, int>>& edge_list);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Induced subgraph on the given vertices (kept in the given order; duplicates rejected).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Kneser graph K(r, s): vertices are the r-subsets of {0..s-1} in lexicographic
// order, edges join disjoint subsets. Requires 1 <= r and 2r < s (connected range).
Graph kneser(int r, int s);

// The r-subsets of {0..s-1} in the vertex order used by kneser().
std::vector<std::vector<int>> kneser_vertex_sets(int r, int s);

std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

}  // namespace homrec
