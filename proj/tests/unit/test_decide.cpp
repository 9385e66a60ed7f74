#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homrec/counting.hpp"
#include "homrec/decide.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

using namespace homrec;

namespace {

Graph clique(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int vertices) {
    Graph g(vertices);
    for (int v = 0; v + 1 < vertices; ++v) g.add_edge(v, v + 1);
    return g;
}

// every labeled graph on exactly n vertices, by edge mask
std::vector<Graph> all_labeled(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
        Graph g(n);
        for (size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
        out.push_back(g);
    }
    return out;
}

// smallest order of a satisfying labeled host, scanning 0..bound
std::optional<int> oracle_min_order(const Instance& inst, int bound) {
    for (int n = 0; n <= bound; ++n)
        for (const Graph& g : all_labeled(n))
            if (satisfies(inst, Host{g, {}, {}})) return n;
    return std::nullopt;
}

Instance plain_instance(CountKind kind, std::vector<std::pair<Graph, Int>> cs,
                        std::optional<int> bound = std::nullopt) {
    Instance inst;
    inst.kind = kind;
    for (auto& [g, h] : cs) inst.constraints.push_back({std::move(g), std::move(h)});
    inst.size_bound = bound;
    return inst;
}

}  // namespace

TEST_CASE("two hom counts pin down the triangle") {
    Instance inst = plain_instance(CountKind::hom, {{clique(1), 3}, {clique(2), 6}}, 3);
    Verdict v = decide_bounded(inst);
    REQUIRE(v.status == Status::yes);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->graph == clique(3));
    CHECK(satisfies(inst, *v.witness));

    // the witness really is unique among labeled graphs up to order 3
    int hits = 0;
    for (int n = 0; n <= 3; ++n)
        for (const Graph& g : all_labeled(n))
            if (satisfies(inst, Host{g, {}, {}})) ++hits;
    CHECK(hits == 1);

    inst.constraints[1].count = 7;
    CHECK(decide_bounded(inst).status == Status::no);
}

TEST_CASE("subgraph instance without enough paths per triangle is infeasible") {
    Instance inst = plain_instance(CountKind::sub, {{path(3), 2}, {clique(3), 1}}, 6);
    CHECK(decide_bounded(inst).status == Status::no);
}

TEST_CASE("bounded decisions agree with the labeled-graph oracle") {
    std::mt19937 rng(20240817);
    std::vector<Graph> pool{clique(1), clique(2), path(3), clique(3)};
    int yes_seen = 0, no_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Instance inst;
        inst.kind = trial % 2 ? CountKind::sub : CountKind::hom;
        int bound = int(rng() % 5);
        int npat = 1 + int(rng() % 3);
        std::vector<Graph> fs;
        for (int i = 0; i < npat; ++i) fs.push_back(pool[rng() % pool.size()]);
        if (trial % 2 == 0) {
            // counts copied from a random host, so the instance is satisfiable
            int n = int(rng() % (bound + 1));
            Graph host(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2) host.add_edge(u, v);
            for (Graph& f : fs) {
                Int h = inst.kind == CountKind::hom ? hom_count(f, host) : sub_count(f, host);
                inst.constraints.push_back({std::move(f), std::move(h)});
            }
        } else {
            for (Graph& f : fs) inst.constraints.push_back({std::move(f), Int(int(rng() % 13))});
        }
        inst.size_bound = bound;
        Verdict v = decide_bounded(inst);
        std::optional<int> want = oracle_min_order(inst, bound);
        if (want) {
            REQUIRE(v.status == Status::yes);
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->graph.order() == *want);  // minimal-order witness
            CHECK(satisfies(inst, *v.witness));
            ++yes_seen;
        } else {
            CHECK(v.status == Status::no);
            ++no_seen;
        }
    }
    CHECK(yes_seen >= 60);  // the sample exercises both outcomes
    CHECK(no_seen >= 20);
}

TEST_CASE("bounded decide over the cap reports unknown") {
    Instance inst = plain_instance(CountKind::hom, {{clique(2), 4}}, 10);
    Verdict v = decide_bounded(inst);
    CHECK(v.status == Status::unknown);
    REQUIRE(v.bound.has_value());
    CHECK(*v.bound == 10);
    CHECK_FALSE(v.reason.empty());

    CHECK_THROWS_AS(decide_bounded(plain_instance(CountKind::hom, {{clique(2), 4}})),
                    std::invalid_argument);
}

TEST_CASE("unbounded decide derives its own search bound") {
    Verdict four_edges = decide_unbounded(plain_instance(CountKind::hom, {{clique(2), 4}}));
    REQUIRE(four_edges.status == Status::yes);
    CHECK(hom_count(clique(2), four_edges.witness->graph) == 4);
    CHECK(four_edges.witness->graph.order() == 3);  // the 2-edge path is minimal

    CHECK(decide_unbounded(plain_instance(CountKind::hom, {{clique(3), 1}})).status == Status::no);

    Verdict empty = decide_unbounded(plain_instance(CountKind::hom, {{clique(1), 0}}));
    REQUIRE(empty.status == Status::yes);
    CHECK(empty.witness->graph.order() == 0);

    Verdict big = decide_unbounded(plain_instance(CountKind::hom, {{clique(3), 60}}));
    CHECK(big.status == Status::unknown);
    REQUIRE(big.bound.has_value());
    CHECK(*big.bound == 180);

    Instance coloured;
    coloured.graph_kind = GraphKind::coloured;
    coloured.constraints.push_back({ColouredGraph{clique(1), {0}}, Int(1)});
    CHECK_THROWS_AS(decide_unbounded(coloured), std::invalid_argument);
}

TEST_CASE("coloured bounded decide finds and verifies hosts") {
    ColouredGraph v0{clique(1), {0}};
    ColouredGraph v1{clique(1), {1}};
    ColouredGraph cross{clique(2), {0, 1}};
    Instance inst;
    inst.graph_kind = GraphKind::coloured;
    inst.constraints.push_back({v0, Int(2)});
    inst.constraints.push_back({v1, Int(1)});
    inst.constraints.push_back({cross, Int(2)});
    inst.size_bound = 3;
    Verdict v = decide_bounded(inst);
    REQUIRE(v.status == Status::yes);
    CHECK(satisfies(inst, *v.witness));
    CHECK(v.witness->graph.order() == 3);

    // an odd monochromatic-edge count can never be met
    Instance odd;
    odd.graph_kind = GraphKind::coloured;
    odd.constraints.push_back({ColouredGraph{clique(2), {0, 0}}, Int(1)});
    odd.size_bound = 3;
    CHECK(decide_bounded(odd).status == Status::no);

    SearchCaps tiny;
    tiny.attempts = 3;
    Verdict starved = decide_bounded(inst, tiny);
    CHECK(starved.status == Status::unknown);
    CHECK_FALSE(starved.reason.empty());
}

TEST_CASE("labelled bounded decide places every pattern label") {
    LabelledGraph lone{clique(1), {{5, 0}}};
    LabelledGraph ledge{clique(2), {{5, 0}, {6, 1}}};
    Instance inst;
    inst.graph_kind = GraphKind::labelled;
    inst.constraints.push_back({lone, Int(1)});
    inst.constraints.push_back({ledge, Int(1)});
    inst.size_bound = 2;
    Verdict v = decide_bounded(inst);
    REQUIRE(v.status == Status::yes);
    CHECK(satisfies(inst, *v.witness));
    CHECK(v.witness->graph.order() == 2);
    CHECK(v.witness->graph.edge_count() == 1);
    CHECK(v.witness->labels.size() == 2);

    // a single labelled vertex admits exactly one homomorphism, never two
    Instance unsat;
    unsat.graph_kind = GraphKind::labelled;
    unsat.constraints.push_back({lone, Int(2)});
    unsat.size_bound = 3;
    CHECK(decide_bounded(unsat).status == Status::no);

    SearchCaps tiny;
    tiny.attempts = 2;
    CHECK(decide_bounded(inst, tiny).status == Status::unknown);
}

TEST_CASE("region maps match hand enumerations") {
    auto region3 = region_map(3, {clique(2), clique(3)}, CountKind::sub);
    std::vector<std::vector<Int>> want3{{0, 0}, {1, 0}, {2, 0}, {3, 1}};
    CHECK(region3 == want3);

    auto region2 = region_map(2, {clique(1), clique(2)}, CountKind::hom);
    std::vector<std::vector<Int>> want2{{2, 0}, {2, 2}};
    CHECK(region2 == want2);

    CHECK(region_map(5, {clique(2), clique(3)}, CountKind::sub, 3)
          == region_map(5, {clique(2), clique(3)}, CountKind::sub, 1));

    CHECK_THROWS_AS(region_map(3, {}, CountKind::sub), std::invalid_argument);
    CHECK_THROWS_AS(region_map(3, {clique(2)}, CountKind::sub, 0), std::invalid_argument);
}

TEST_CASE("region vectors respect the edge/triangle bound") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& row : region_map(n, {clique(2), clique(3)}, CountKind::sub))
            CHECK(row[1] <= kk_bound(row[0]));
}

TEST_CASE("region CSV is lexicographically sorted with a v-header") {
    auto rows = region_map(3, {clique(2), clique(3)}, CountKind::sub);
    CHECK(region_csv(2, rows) == "v1,v2\n0,0\n1,0\n2,0\n3,1\n");
    CHECK_THROWS_AS(region_csv(3, rows), std::invalid_argument);
}

TEST_CASE("triangle bound closed form") {
    CHECK(kk_bound(0) == 0);
    CHECK(kk_bound(1) == 0);
    CHECK(kk_bound(3) == 1);
    CHECK(kk_bound(5) == 2);
    CHECK(kk_bound(6) == 4);
    CHECK(kk_bound(10) == 10);   // K5
    CHECK(kk_bound(15) == 20);   // K6
    CHECK(kk_bound(parse_int("4950")) == parse_int("161700"));  // K100
    CHECK_THROWS_AS(kk_bound(-1), std::invalid_argument);

    // true maxima never exceed the bound (checked against graphs on <= 6 vertices)
    std::vector<Int> best(16, -1);
    for (int n = 0; n <= 6; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
            Graph g(n);
            for (size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
            long long m = g.edge_count();
            if (m < 16) {
                Int t = sub_count(clique(3), g);
                if (t > best[m]) best[m] = t;
            }
        }
    }
    for (long long m = 0; m < 16; ++m) CHECK(best[m] <= kk_bound(m));
}

TEST_CASE("vertex/edge feasibility closed form matches brute force") {
    CHECK(edge_vertex_feasible(3, 6));
    CHECK_FALSE(edge_vertex_feasible(3, 7));
    CHECK_FALSE(edge_vertex_feasible(2, 4));
    CHECK(edge_vertex_feasible(2, 2));
    CHECK(edge_vertex_feasible(0, 0));
    CHECK_THROWS_AS(edge_vertex_feasible(-1, 0), std::invalid_argument);

    for (int h1 = 0; h1 <= 4; ++h1)
        for (int h2 = 0; h2 <= 12; ++h2) {
            Instance inst = plain_instance(
                CountKind::hom, {{clique(1), h1}, {clique(2), h2}}, h1);
            bool want = decide_bounded(inst).status == Status::yes;
            CHECK(edge_vertex_feasible(h1, h2) == want);
        }
}
TEST_CASE("coloured bounded decisions agree with the exhaustive coloured oracle") {
    // every coloured host on exactly n vertices over palette {0, 1}
    auto all_coloured = [](int n) {
        std::vector<ColouredGraph> out;
        for (const Graph& g : all_labeled(n))
            for (int cmask = 0; cmask < (1 << n); ++cmask) {
                std::vector<int> col(n);
                for (int v = 0; v < n; ++v) col[v] = (cmask >> v) & 1;
                out.push_back({g, col});
            }
        return out;
    };
    auto edge = [](int c0, int c1) { return ColouredGraph{clique(2), {c0, c1}}; };
    std::vector<ColouredGraph> pool{
        ColouredGraph{clique(1), {0}},
        ColouredGraph{clique(1), {1}},
        edge(0, 1),
        edge(0, 0),
        edge(1, 1),
        ColouredGraph{path(3), {0, 1, 0}},
        ColouredGraph{path(3), {0, 0, 1}},
        ColouredGraph{clique(3), {0, 1, 1}},
        ColouredGraph{Graph(2), {0, 1}},  // disconnected: exercises splitting
    };

    std::mt19937 rng(20260815);
    int yes_seen = 0, no_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Instance inst;
        inst.graph_kind = GraphKind::coloured;
        inst.kind = trial % 2 ? CountKind::sub : CountKind::hom;
        int bound = int(rng() % 4);
        int npat = 1 + int(rng() % 2);
        std::vector<ColouredGraph> fs;
        for (int i = 0; i < npat; ++i) fs.push_back(pool[rng() % pool.size()]);
        if (trial % 2 == 0) {
            // counts read off a random host keep the instance satisfiable
            const auto hosts = all_coloured(int(rng() % (bound + 1)));
            const ColouredGraph& host = hosts[rng() % hosts.size()];
            for (ColouredGraph& f : fs) {
                Int h = constraint_count(inst.kind, f, Host{host.graph, host.colours, {}});
                inst.constraints.push_back({std::move(f), std::move(h)});
            }
        } else {
            for (ColouredGraph& f : fs)
                inst.constraints.push_back({std::move(f), Int(int(rng() % 8))});
        }
        inst.size_bound = bound;

        std::optional<int> want;
        for (int n = 0; n <= bound && !want; ++n)
            for (const ColouredGraph& g : all_coloured(n))
                if (satisfies(inst, Host{g.graph, g.colours, {}})) {
                    want = n;
                    break;
                }

        Verdict v = decide_bounded(inst);
        if (want) {
            REQUIRE(v.status == Status::yes);
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->graph.order() == *want);  // minimal-order witness
            CHECK(satisfies(inst, *v.witness));
            ++yes_seen;
        } else {
            CHECK(v.status == Status::no);
            ++no_seen;
        }
    }
    CHECK(yes_seen >= 60);
    CHECK(no_seen >= 20);
}

TEST_CASE("masked coloured search still reaches hosts needing inactive-colour isolates") {
    // the only pattern edge joins two colour-0 endpoints, so colour-1 vertices
    // can never attach to anything — yet two of them must still appear
    Instance inst;
    inst.graph_kind = GraphKind::coloured;
    inst.constraints.push_back({ColouredGraph{clique(2), {0, 0}}, Int(2)});
    inst.constraints.push_back({ColouredGraph{clique(1), {1}}, Int(2)});
    inst.size_bound = 4;
    Verdict v = decide_bounded(inst);
    REQUIRE(v.status == Status::yes);
    CHECK(satisfies(inst, *v.witness));
    CHECK(v.witness->graph.order() == 4);
    CHECK(v.witness->graph.edge_count() == 1);

    // a unit count on a disconnected pattern decomposes into its components
    Instance split;
    split.graph_kind = GraphKind::coloured;
    ColouredGraph two_parts{make_graph(3, {{1, 2}}), {0, 0, 1}};
    split.constraints.push_back({two_parts, Int(1)});
    split.size_bound = 2;
    Verdict sv = decide_bounded(split);
    REQUIRE(sv.status == Status::yes);
    CHECK(satisfies(split, *sv.witness));
    CHECK(sv.witness->graph.order() == 2);
}
