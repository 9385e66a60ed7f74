#pragma once

#include "homrec/bigint.hpp"
#include "homrec/graph.hpp"

namespace homrec {

// Number of homomorphisms F -> G (edge-preserving vertex maps). Coloured
// variants must preserve colour values; labelled variants must send F's
// labelled vertices onto G's equally-labelled vertices (F's label set must be
// contained in G's, otherwise an error is raised).
Int hom_count(const Graph& F, const Graph& G);
Int hom_count(const ColouredGraph& F, const ColouredGraph& G);
Int hom_count(const LabelledGraph& F, const LabelledGraph& G);

Int injective_hom_count(const Graph& F, const Graph& G);
Int injective_hom_count(const ColouredGraph& F, const ColouredGraph& G);
Int injective_hom_count(const LabelledGraph& F, const LabelledGraph& G);

// Subgraph copies of F in G: injective homomorphisms divided by |Aut(F)|.
Int sub_count(const Graph& F, const Graph& G);
Int sub_count(const ColouredGraph& F, const ColouredGraph& G);

// Vertex subsets U of G with G[U] isomorphic to F.
Int indsub_count(const Graph& F, const Graph& G);

// Homomorphisms surjective on V(G).
Int surj_count(const Graph& F, const Graph& G);

// sub(F,G) assembled from the census of graphs on exactly |V(F)| vertices:
// sum over H of sub(F,H) * indsub(H,G).
Int hom_via_sub_decomposition(const Graph& F, const Graph& G);

// hom(F,G) assembled from induced-subgraph counts of graphs on at most |V(F)|
// vertices with signed binomial weights; requires |V(G)| > |V(F)|.
Int hom_via_indsub_decomposition(const Graph& F, const Graph& G);

// Connectivity helpers shared by several modules.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace homrec
