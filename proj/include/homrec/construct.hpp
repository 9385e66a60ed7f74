#pragma once

#include "homrec/bigint.hpp"
#include "homrec/graph.hpp"

#include <map>
#include <vector>

namespace homrec {

// How many binomial coefficients C(a_i, k) suffice to write any nonnegative
// integer: proven entries only; the conjectural table is a search hint.
struct GammaTable {
    static const std::map<int, int>& known();        // {1 -> 1, 2 -> 3}
    static const std::map<int, int>& conjectural();  // {3 -> 5}
};

// target = sum of C(parts[i], k), parts nonincreasing with every part >= k.
struct BinomialDecomposition {
    int k = 1;
    std::vector<long long> parts;
};

Int decomposition_sum(const BinomialDecomposition& d);

// Fewest-part decomposition of target into binomials C(a, k), by iterative
// deepening on the part count. part_cap 0 takes the default budget (gamma(k)
// when proven, else 2k*ceil(log2(k+2))); value_cap >= 0 additionally bounds
// every part. Throws when no decomposition exists within the caps.
BinomialDecomposition kamke_decompose(const Int& target, int k, int part_cap = 0,
                                      long long value_cap = -1);

// A graph with sub(K_k, .) = h built from a clique core plus one fresh vertex
// per decomposition part, then padded with isolated vertices.
struct CliqueConstruction {
    Graph graph;
    long long core_order = 0;      // order of the clique the fresh vertices attach to
    BinomialDecomposition parts;   // attachment sizes, one fresh vertex each
    bool gamma_guaranteed = false; // order bound n + gamma(k-1) - 1 applied
};

// Requires k >= 2, n >= 1, 0 <= h <= C(n, k). The result has exactly
// n + gamma(k-1) - 1 vertices when gamma(k-1) is proven, else n + t - 1 with
// t parts reported in the construction record.
CliqueConstruction construct_clique_graph_report(long long n, int k, const Int& h);
Graph construct_clique_graph(long long n, int k, const Int& h);

// Degree multisets of trees on p+2 vertices: p+2 entries summing to 2p+2.
struct DegreeMultiset {
    int p = 0;
    std::vector<int> entries;  // nonincreasing
};

// {2,...,2,1,1} with p twos: the degree multiset of a path on p+2 vertices.
DegreeMultiset multiset_initial(int p);

// Replaces two entries of value c >= 2 by c+1 and c-1.
DegreeMultiset multiset_split(const DegreeMultiset& d, int c);

// Split values applied in order, starting from multiset_initial(p).
struct SplitChain {
    int p = 0;
    std::vector<int> steps;
};

// Applies every step, validating the split precondition at each one.
DegreeMultiset replay_chain(const SplitChain& chain);

// The explicit chain that climbs toward {x, x-1, ..., 2, 1, ..., 1}; its full
// length is C(x_max, 3) with x_max the largest x such that C(x, 2) <= p.
long long staircase_length(int p);
SplitChain staircase_chain(int p, long long steps);

// A tree realizing the chain's final degree multiset: start from a path and
// rewire one edge per split (the lowest-index vertex of the split degree loses
// its lowest-index off-path edge to the second-lowest).
Graph tree_from_degrees(const SplitChain& chain);

// C(n,3) - sub(K2,G)*(n-2) + sum_v C(deg v, 2) - sub(K3,G): the number of
// triangles in the complement of G, without building the complement.
Int complement_triangle_formula(const Graph& g);

// Triangle count of the complement of the path-forest on n+1 vertices whose
// tree part has degree multiset {2 x p, 1, 1}: C(n+1,3) - (p+1)(n-1) + p.
Int forest_complement_count(long long p, long long n);

struct TriangleConstruction {
    Graph graph;
    bool via_clique = false;  // h small enough for the clique-core route
    long long p = -1;         // band index of the forest route
    long long steps = 0;      // splits walked up from the band floor
};

// A graph on exactly n+1 vertices with sub(K3, .) = h; requires n >= 130 and
// h <= C(n, 3).
TriangleConstruction construct_triangle_graph_report(long long n, const Int& h);
Graph construct_triangle_graph(long long n, const Int& h);

// s(p): the number of multisets in the longest split chain from
// multiset_initial(p), by exhaustive memoized search. Requires p <= 10.
int longest_chain_length(int p);

}  // namespace homrec
