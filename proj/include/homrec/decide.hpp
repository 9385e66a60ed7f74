#pragma once

#include "homrec/instance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace homrec {

// Caps for the exhaustive searches; decisions outside them come back Unknown.
struct SearchCaps {
    int plain_order = 9;              // largest host order enumerated exhaustively
    uint64_t attempts = 100'000'000;  // candidate budget for coloured/labelled search
};

// Exhaustive scan of all hosts with at most size_bound vertices, ascending by
// order, so a Yes carries a minimal-order witness. Coloured hosts draw colours
// from the patterns; labelled hosts place every pattern label on some vertex.
Verdict decide_bounded(const Instance& inst, const SearchCaps& caps = {});

// Plain instances only: any satisfiable instance has a witness on at most
// sum(count_i * |pattern_i|) vertices (restrict a witness to the union of the
// counted images), so the search is exhaustive whenever that bound fits the cap.
Verdict decide_unbounded(const Instance& inst, const SearchCaps& caps = {});

// The exact set of realizable count vectors over all hosts with exactly n
// vertices, sorted lexicographically. Threads only change wall time.
std::vector<std::vector<Int>> region_map(int n, const std::vector<Graph>& patterns,
                                         CountKind kind, int threads = 1);

// CSV with header v1,...,v<width> and one row per vector.
std::string region_csv(size_t width, const std::vector<std::vector<Int>>& rows);

// Largest triangle count among graphs with the given edge count: with the real
// x solving C(x,2) = m this is floor(x(x-1)(x-2)/6) = floor(m(sqrt(8m+1)-3)/6),
// evaluated exactly.
Int kk_bound(const Int& edge_count);

// Closed form for the instance {hom(K1)=h1, hom(K2)=h2}.
bool edge_vertex_feasible(const Int& h1, const Int& h2);

}  // namespace homrec
