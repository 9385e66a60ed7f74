#pragma once

#include "homrec/bigint.hpp"
#include "homrec/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace homrec {

enum class CountKind { hom, sub };
enum class GraphKind { plain, coloured, labelled };

std::string to_string(CountKind k);
std::string to_string(GraphKind k);
CountKind count_kind_from_string(const std::string& s);
GraphKind graph_kind_from_string(const std::string& s);

using PatternGraph = std::variant<Graph, ColouredGraph, LabelledGraph>;

// One pattern graph together with the count a host must realize.
struct Constraint {
    PatternGraph pattern;
    Int count;
};

// A reconstruction instance: all constraints share one count kind and one
// graph kind; size_bound, when present, caps the host order.
struct Instance {
    CountKind kind = CountKind::hom;
    GraphKind graph_kind = GraphKind::plain;
    std::vector<Constraint> constraints;
    std::optional<int> size_bound;
};

// Candidate or witness host in whichever flavour the instance needs.
struct Host {
    Graph graph;
    std::vector<int> colours;   // used when the instance is coloured
    std::map<int, int> labels;  // label id -> vertex, used when labelled
};

enum class Status { yes, no, unknown };

struct Verdict {
    Status status = Status::unknown;
    std::optional<Host> witness;  // present on yes
    std::string reason;           // present on unknown
    std::optional<Int> bound;     // unexplored search bound behind an unknown
};

const Graph& pattern_graph(const PatternGraph& p);

// Rejects empty instances, graph-kind mismatches, malformed colourings or
// labelings, and negative counts.
void validate(const Instance& inst);

// Count of one pattern in a host, honouring the instance flavour.
Int constraint_count(CountKind kind, const PatternGraph& pattern, const Host& host);

// Exact recount of every constraint against a candidate host.
bool satisfies(const Instance& inst, const Host& host);

std::string to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

// A disjoint-union description: so-many copies of each listed host.
struct RecipeItem {
    Graph host;
    Int multiplicity;
};
using Recipe = std::vector<RecipeItem>;

std::string recipe_to_json(const Recipe& recipe);
Recipe recipe_from_json(const std::string& text);

// Materializes the disjoint union a recipe describes; refuses to build graphs
// larger than max_order vertices.
Graph realize_recipe(const Recipe& recipe, int max_order = 4096);

}  // namespace homrec
