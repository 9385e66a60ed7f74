#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homrec/graph.hpp"

namespace homrec {

using CanonicalCode = std::string;

// Thrown when an explicit search budget runs out (callers turn this into Unknown).
struct budget_exhausted : std::runtime_error {
    budget_exhausted() : std::runtime_error("search budget exhausted") {}
};

// Canonical code of a graph: equal codes iff isomorphic. Supports order <= 64.
CanonicalCode canonical_code(const Graph& g);
// Colour-aware variant: isomorphisms must preserve colour values.
CanonicalCode canonical_code(const ColouredGraph& g);

bool isomorphic(const Graph& a, const Graph& b);
bool isomorphic(const ColouredGraph& a, const ColouredGraph& b);

// Number of automorphisms, by exhaustive backtracking (exact; meant for small or
// highly structured graphs). `node_budget` guards runaway searches.
long long aut_count(const Graph& g, uint64_t node_budget = 200'000'000);
long long aut_count(const ColouredGraph& g, uint64_t node_budget = 200'000'000);
// Automorphisms fixing the given vertex.
long long pinned_aut_count(const Graph& g, int pinned, uint64_t node_budget = 200'000'000);

// Smallest vertex of each vertex's automorphism orbit (orbits[v] == orbits[u]
// iff some automorphism maps v to u).
std::vector<int> automorphism_orbits(const Graph& g);

// All graphs on exactly n vertices (or on at most n when exactly=false), one per
// isomorphism class, streamed in a fixed deterministic order via canonical
// augmentation. visit returns false to stop early. n <= 9.
void enumerate_nonisomorphic(int n, bool exactly, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_nonisomorphic(int n, bool exactly);

// Parallel variant with identical stream order folded per seed subtree; the
// result is the same multiset/order of classes as the serial stream.
void enumerate_nonisomorphic_parallel(int n, bool exactly, int threads,
                                      const std::function<void(int seed_index, const Graph&)>& visit);

// One canonical-augmentation level: the accepted (m+1)-vertex children of the
// given m-vertex parents, each isomorphism class exactly once across all parents.
// `keep` may drop a child (with its whole subtree, sound for monotone predicates).
// Every candidate child counts one unit against *attempts if provided; throws
// budget_exhausted when it reaches zero.
std::vector<Graph> augmentation_children(const std::vector<Graph>& parents,
                                         const std::function<bool(const Graph&)>& keep,
                                         uint64_t* attempts = nullptr);
// allowed_nbrs(parent, colour), when given, returns a bitmask of parent
// vertices the new colour-`colour` vertex may attach to; its neighbourhood is
// then restricted to submasks of it. The restriction must be isomorphism
// invariant (e.g. depend on colours only) and describe a class closed under
// vertex deletion, or completeness of the generation is lost.
std::vector<ColouredGraph> augmentation_children(
    const std::vector<ColouredGraph>& parents,
    const std::vector<int>& palette,
    const std::function<bool(const ColouredGraph&)>& keep,
    uint64_t* attempts = nullptr,
    const std::function<uint64_t(const ColouredGraph&, int)>& allowed_nbrs = nullptr);

// Streams every keep-passing candidate child without reducing to one
// representative per isomorphism class, so classes may repeat across (and
// within) parents. Every class augmentation_children would emit is visited at
// least once, which makes this suitable for a final search level where only
// existence matters and per-class dedup storage would dominate. visit returns
// false to stop early. Counts attempts exactly like augmentation_children and
// honours the same optional neighbourhood restriction.
void augmentation_candidates(
    const std::vector<ColouredGraph>& parents,
    const std::vector<int>& palette,
    const std::function<bool(const ColouredGraph&)>& keep,
    const std::function<bool(const ColouredGraph&)>& visit,
    uint64_t* attempts = nullptr,
    const std::function<uint64_t(const ColouredGraph&, int)>& allowed_nbrs = nullptr);

}  // namespace homrec
