#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homrec/canonical.hpp"
#include "homrec/counting.hpp"
#include "homrec/graph.hpp"

using namespace homrec;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// K4 minus one edge
Graph diamond() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// oracle: count homomorphisms by brute force over all |G|^|F| maps
Int hom_brute(const Graph& F, const Graph& G, bool injective = false, bool surjective = false) {
    int nf = F.order(), ng = G.order();
    if (nf == 0) return (surjective && ng > 0) ? 0 : 1;
    if (ng == 0) return 0;
    Int count = 0;
    std::vector<int> img(nf, 0);
    for (;;) {
        bool ok = true;
        for (int u = 0; u < nf && ok; ++u)
            for (int v = u + 1; v < nf && ok; ++v)
                if (F.adjacent(u, v) && !G.adjacent(img[u], img[v])) ok = false;
        if (ok && injective) {
            std::vector<char> used(ng, 0);
            for (int u = 0; u < nf && ok; ++u) {
                if (used[img[u]]) ok = false;
                used[img[u]] = 1;
            }
        }
        if (ok && surjective) {
            std::vector<char> hit(ng, 0);
            for (int u = 0; u < nf; ++u) hit[img[u]] = 1;
            for (int v = 0; v < ng && ok; ++v)
                if (!hit[v]) ok = false;
        }
        if (ok) ++count;
        int i = nf - 1;
        while (i >= 0 && img[i] == ng - 1) img[i--] = 0;
        if (i < 0) break;
        ++img[i];
    }
    return count;
}

}  // namespace

TEST_CASE("hom_count basics") {
    CHECK(hom_count(complete(1), complete(3)) == 3);
    CHECK(hom_count(complete(2), complete(3)) == 6);
    CHECK(hom_count(complete(3), complete(3)) == 6);
    CHECK(hom_count(diamond(), complete(3)) == 6);
    CHECK(hom_count(diamond(), complete(4)) == 48);
    CHECK(hom_count(path(3), complete(2)) == 2);
    // empty pattern has exactly the empty map; empty host kills nonempty patterns
    CHECK(hom_count(Graph(0), complete(3)) == 1);
    CHECK(hom_count(complete(1), Graph(0)) == 0);
    CHECK(hom_count(Graph(0), Graph(0)) == 1);
}

TEST_CASE("hom_count matches brute force on random pairs") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 40; ++rep) {
        Graph F = random_graph(1 + rep % 4, 0.5, rng);
        Graph G = random_graph(1 + (rep * 7) % 5, 0.5, rng);
        CHECK(hom_count(F, G) == hom_brute(F, G));
    }
}

TEST_CASE("hom additivity over disjoint unions for connected patterns") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        Graph F = random_graph(1 + rep % 4, 0.7, rng);
        if (!is_connected(F)) continue;
        Graph G = random_graph(1 + rep % 4, 0.5, rng);
        Graph H = random_graph(1 + (rep * 3) % 4, 0.5, rng);
        CHECK(hom_count(F, disjoint_union(G, H)) == hom_count(F, G) + hom_count(F, H));
    }
}

TEST_CASE("disconnected pattern multiplies components") {
    Graph twoEdges = disjoint_union(complete(2), complete(2));
    CHECK(hom_count(twoEdges, complete(3)) == 36);
    std::mt19937 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        Graph F = random_graph(4, 0.3, rng);
        Graph G = random_graph(4, 0.5, rng);
        CHECK(hom_count(F, G) == hom_brute(F, G));
    }
}

TEST_CASE("injective hom and sub counts") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 30; ++rep) {
        Graph F = random_graph(1 + rep % 4, 0.5, rng);
        Graph G = random_graph(1 + (rep * 5) % 6, 0.5, rng);
        Int inj = injective_hom_count(F, G);
        CHECK(inj == hom_brute(F, G, true));
        CHECK(sub_count(F, G) * Int(aut_count(F)) == inj);
    }
    CHECK(sub_count(complete(3), complete(4)) == 4);
    CHECK(sub_count(path(3), complete(3)) == 3);
    CHECK(sub_count(complete(3), complete(3)) == 1);
    std::mt19937 rng2(17);
    for (int rep = 0; rep < 50; ++rep) {
        Graph G = random_graph(1 + rep % 7, 0.4, rng2);
        CHECK(sub_count(complete(2), G) == Int(G.edge_count()));
    }
}

TEST_CASE("indsub counts") {
    CHECK(indsub_count(complete(2), path(3)) == 2);
    CHECK(indsub_count(make_graph(2, {}), complete(3)) == 0);
    // all 3-vertex types partition the 3-subsets
    std::mt19937 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 3 + rep % 5;
        Graph G = random_graph(n, 0.5, rng);
        Int total = 0;
        enumerate_nonisomorphic(3, true, [&](const Graph& H) {
            total += indsub_count(H, G);
            return true;
        });
        CHECK(total == binomial(Int(n), 3));
    }
}

TEST_CASE("surjective homs") {
    CHECK(surj_count(complete(2), complete(2)) == 2);
    // no homs K3 -> K2 at all (odd cycle, 2 colours), so none surjective
    CHECK(hom_count(complete(3), complete(2)) == 0);
    CHECK(surj_count(complete(3), complete(2)) == 0);
    CHECK(surj_count(complete(3), complete(3)) == 6);
    CHECK(surj_count(path(3), complete(2)) == 2);
    CHECK(surj_count(path(3), complete(4)) == 0);  // pigeonhole
    std::mt19937 rng(29);
    for (int rep = 0; rep < 25; ++rep) {
        Graph F = random_graph(1 + rep % 3, 0.5, rng);
        Graph G = random_graph(1 + rep % 4, 0.5, rng);
        CHECK(surj_count(F, G) == hom_brute(F, G, false, true));
    }
}

TEST_CASE("surj inclusion-exclusion identity") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 15; ++rep) {
        Graph F = random_graph(1 + rep % 3, 0.6, rng);
        int n = 1 + rep % 4;
        Graph G = random_graph(n, 0.5, rng);
        Int rhs = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> U;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) U.push_back(v);
            Int term = hom_count(F, induced_subgraph(G, U));
            if ((n - static_cast<int>(U.size())) % 2 == 1) term = -term;
            rhs += term;
        }
        CHECK(surj_count(F, G) == rhs);
    }
}

TEST_CASE("sub decomposition over same-size census") {
    CHECK(hom_via_sub_decomposition(complete(3), complete(5)) == 10);
    CHECK(hom_via_sub_decomposition(path(3), complete(3)) == 3);
    std::mt19937 rng(37);
    for (int rep = 0; rep < 12; ++rep) {
        Graph F = random_graph(3, 0.6, rng);
        Graph G = random_graph(4 + rep % 3, 0.5, rng);
        CHECK(hom_via_sub_decomposition(F, G) == sub_count(F, G));
    }
}

TEST_CASE("signed indsub decomposition") {
    CHECK(hom_via_indsub_decomposition(complete(2), complete(3)) == 6);
    CHECK(hom_via_indsub_decomposition(complete(3), complete(4)) == 24);
    CHECK_THROWS(hom_via_indsub_decomposition(complete(3), complete(3)));
    std::mt19937 rng(41);
    for (int rep = 0; rep < 12; ++rep) {
        Graph F = random_graph(1 + rep % 3, 0.6, rng);
        Graph G = random_graph(4 + rep % 3, 0.5, rng);
        CHECK(hom_via_indsub_decomposition(F, G) == hom_count(F, G));
    }
}

TEST_CASE("coloured hom counting") {
    ColouredGraph F{complete(2), {0, 1}};
    ColouredGraph G{complete(3), {0, 1, 1}};
    // edge with colours (0,1) into triangle coloured (0,1,1): 0->v0, 1->{v1,v2}
    CHECK(hom_count(F, G) == 2);
    ColouredGraph F2{complete(2), {0, 0}};
    CHECK(hom_count(F2, G) == 0);  // no 0-0 edge in host
    CHECK(injective_hom_count(F, G) == 2);
    CHECK(sub_count(F, G) == 2);
}

TEST_CASE("labelled hom counting") {
    LabelledGraph F{complete(2), {{7, 0}}};       // vertex 0 carries label 7
    LabelledGraph G{complete(3), {{7, 2}, {9, 0}}};
    // hom must send vertex 0 to host vertex 2; vertex 1 free among neighbours
    CHECK(hom_count(F, G) == 2);
    LabelledGraph Gmissing{complete(3), {{9, 0}}};
    CHECK_THROWS(hom_count(F, Gmissing));
    // two labels pinning one pattern vertex to two host vertices: no maps
    LabelledGraph F2{complete(2), {{7, 0}, {9, 0}}};
    CHECK(hom_count(F2, G) == 0);
    LabelledGraph G2{complete(3), {{7, 2}, {9, 2}}};
    CHECK(hom_count(F2, G2) == 2);
}
