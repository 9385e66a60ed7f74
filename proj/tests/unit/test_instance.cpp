#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homrec/counting.hpp"
#include "homrec/instance.hpp"

#include <stdexcept>

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

}  // namespace

TEST_CASE("kind names round trip and reject junk") {
    CHECK(count_kind_from_string(to_string(CountKind::hom)) == CountKind::hom);
    CHECK(count_kind_from_string(to_string(CountKind::sub)) == CountKind::sub);
    CHECK(graph_kind_from_string(to_string(GraphKind::plain)) == GraphKind::plain);
    CHECK(graph_kind_from_string(to_string(GraphKind::coloured)) == GraphKind::coloured);
    CHECK(graph_kind_from_string(to_string(GraphKind::labelled)) == GraphKind::labelled);
    CHECK_THROWS_AS(count_kind_from_string("homs"), std::invalid_argument);
    CHECK_THROWS_AS(graph_kind_from_string(""), std::invalid_argument);
}

TEST_CASE("validate rejects malformed instances") {
    Instance empty;
    CHECK_THROWS_AS(validate(empty), std::invalid_argument);

    Instance flavour;
    flavour.graph_kind = GraphKind::coloured;
    flavour.constraints.push_back({clique(2), Int(6)});
    CHECK_THROWS_AS(validate(flavour), std::invalid_argument);

    Instance bad_colours;
    bad_colours.graph_kind = GraphKind::coloured;
    bad_colours.constraints.push_back({ColouredGraph{clique(2), {0}}, Int(1)});
    CHECK_THROWS_AS(validate(bad_colours), std::invalid_argument);

    Instance bad_label;
    bad_label.graph_kind = GraphKind::labelled;
    bad_label.constraints.push_back({LabelledGraph{clique(2), {{7, 5}}}, Int(1)});
    CHECK_THROWS_AS(validate(bad_label), std::invalid_argument);

    Instance negative;
    negative.constraints.push_back({clique(2), Int(-1)});
    CHECK_THROWS_AS(validate(negative), std::invalid_argument);

    Instance bad_bound;
    bad_bound.constraints.push_back({clique(2), Int(2)});
    bad_bound.size_bound = -3;
    CHECK_THROWS_AS(validate(bad_bound), std::invalid_argument);

    Instance fine;
    fine.constraints.push_back({clique(2), Int(2)});
    fine.size_bound = 4;
    CHECK_NOTHROW(validate(fine));
}

TEST_CASE("plain instance JSON round trip") {
    Instance inst;
    inst.kind = CountKind::hom;
    inst.constraints.push_back({clique(1), Int(3)});
    inst.constraints.push_back({clique(2), Int(6)});
    inst.size_bound = 3;

    Instance back = instance_from_json(to_json(inst));
    CHECK(back.kind == CountKind::hom);
    CHECK(back.graph_kind == GraphKind::plain);
    REQUIRE(back.constraints.size() == 2);
    CHECK(std::get<Graph>(back.constraints[0].pattern) == clique(1));
    CHECK(std::get<Graph>(back.constraints[1].pattern) == clique(2));
    CHECK(back.constraints[0].count == 3);
    CHECK(back.constraints[1].count == 6);
    REQUIRE(back.size_bound.has_value());
    CHECK(*back.size_bound == 3);
}

TEST_CASE("coloured and labelled instance JSON round trips") {
    Instance col;
    col.graph_kind = GraphKind::coloured;
    col.constraints.push_back({ColouredGraph{path(3), {1, 0, 1}}, Int(2)});
    Instance col_back = instance_from_json(to_json(col));
    REQUIRE(col_back.constraints.size() == 1);
    const auto& cg = std::get<ColouredGraph>(col_back.constraints[0].pattern);
    CHECK(cg.graph == path(3));
    CHECK(cg.colours == std::vector<int>{1, 0, 1});

    Instance lab;
    lab.kind = CountKind::hom;
    lab.graph_kind = GraphKind::labelled;
    lab.constraints.push_back({LabelledGraph{path(2), {{10, 0}, {11, 1}}}, Int(1)});
    Instance lab_back = instance_from_json(to_json(lab));
    const auto& lg = std::get<LabelledGraph>(lab_back.constraints[0].pattern);
    CHECK(lg.graph == path(2));
    CHECK(lg.labels == std::map<int, int>{{10, 0}, {11, 1}});

    // counts may also arrive as plain JSON integers
    Instance relaxed = instance_from_json(
        R"({"kind":"sub","graph_kind":"plain","constraints":[{"graph6":"A_","count":5}]})");
    CHECK(relaxed.kind == CountKind::sub);
    CHECK(relaxed.constraints[0].count == 5);
    CHECK_FALSE(relaxed.size_bound.has_value());
}

TEST_CASE("instance JSON rejects malformed input") {
    CHECK_THROWS_AS(instance_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json("[]"), std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json(R"({"graph_kind":"plain","constraints":[]})"),
                    std::invalid_argument);
    // unknown key
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"plain","constraints":[{"graph6":"A_","count":"1"}],"bound":3})"),
        std::invalid_argument);
    // empty constraint list
    CHECK_THROWS_AS(instance_from_json(R"({"kind":"hom","graph_kind":"plain","constraints":[]})"),
                    std::invalid_argument);
    // malformed graph6
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"plain","constraints":[{"graph6":"","count":"1"}]})"),
        std::invalid_argument);
    // negative and non-integer counts
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"plain","constraints":[{"graph6":"A_","count":"-2"}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"plain","constraints":[{"graph6":"A_","count":1.5}]})"),
        std::invalid_argument);
    // colours/labels where they do not belong
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"plain","constraints":[{"graph6":"A_","count":"1","colours":[0,0]}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"coloured","constraints":[{"graph6":"A_","count":"1"}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"coloured","constraints":[{"graph6":"A_","count":"1","colours":[0]}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"labelled","constraints":[{"graph6":"A_","count":"1","labels":{"x":0}}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"labelled","constraints":[{"graph6":"A_","count":"1","labels":{"3":9}}]})"),
        std::invalid_argument);
    // bad size_bound
    CHECK_THROWS_AS(instance_from_json(
        R"({"kind":"hom","graph_kind":"plain","constraints":[{"graph6":"A_","count":"1"}],"size_bound":-1})"),
        std::invalid_argument);
}

TEST_CASE("constraint_count matches the counting module") {
    Host k3{clique(3), {}, {}};
    Host k4{clique(4), {}, {}};
    CHECK(constraint_count(CountKind::hom, PatternGraph{clique(2)}, k3) == 6);
    CHECK(constraint_count(CountKind::sub, PatternGraph{clique(3)}, k4) == 4);

    ColouredGraph edge01{clique(2), {0, 1}};
    Host host_col{path(3), {0, 1, 0}, {}};
    CHECK(constraint_count(CountKind::hom, PatternGraph{edge01}, host_col)
          == hom_count(edge01, ColouredGraph{path(3), {0, 1, 0}}));
    Host bare{path(3), {}, {}};
    CHECK_THROWS_AS(constraint_count(CountKind::hom, PatternGraph{edge01}, bare),
                    std::invalid_argument);

    LabelledGraph lpat{clique(1), {{5, 0}}};
    Host host_lab{path(2), {}, {{5, 1}}};
    CHECK(constraint_count(CountKind::hom, PatternGraph{lpat}, host_lab) == 1);
    CHECK_THROWS_AS(constraint_count(CountKind::sub, PatternGraph{lpat}, host_lab),
                    std::invalid_argument);
}

TEST_CASE("satisfies recounts every constraint") {
    Instance inst;
    inst.constraints.push_back({clique(1), Int(3)});
    inst.constraints.push_back({clique(2), Int(6)});
    CHECK(satisfies(inst, Host{clique(3), {}, {}}));
    CHECK_FALSE(satisfies(inst, Host{path(3), {}, {}}));

    inst.constraints[1].count = 7;
    CHECK_FALSE(satisfies(inst, Host{clique(3), {}, {}}));
}

TEST_CASE("recipes round trip and realize as disjoint unions") {
    Recipe r{{clique(3), Int(2)}, {clique(2), Int(3)}};
    Recipe back = recipe_from_json(recipe_to_json(r));
    REQUIRE(back.size() == 2);
    CHECK(back[0].host == clique(3));
    CHECK(back[0].multiplicity == 2);
    CHECK(back[1].host == clique(2));
    CHECK(back[1].multiplicity == 3);

    Graph g = realize_recipe(r);
    CHECK(g.order() == 2 * 3 + 3 * 2);
    CHECK(g.edge_count() == 2 * 3 + 3 * 1);
    // hom counts add over components for a connected pattern
    CHECK(hom_count(clique(2), g) == 2 * 6 + 3 * 2);

    CHECK_THROWS_AS(realize_recipe(r, 5), std::invalid_argument);
    Recipe huge{{clique(3), parse_int("1000000000000")}};
    CHECK_THROWS_AS(realize_recipe(huge), std::invalid_argument);

    CHECK_THROWS_AS(recipe_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(recipe_from_json(R"([{"graph6":"Bw"}])"), std::invalid_argument);
    CHECK_THROWS_AS(recipe_from_json(R"([{"graph6":"Bw","multiplicity":"-1"}])"),
                    std::invalid_argument);

    CHECK(realize_recipe({}).order() == 0);
}