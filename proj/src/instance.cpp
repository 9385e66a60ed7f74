#include "homrec/instance.hpp"

#include "homrec/counting.hpp"

#include "json.hpp"

#include <stdexcept>

namespace homrec {

namespace {

using nlohmann::json;

Int count_from_json(const json& j, const std::string& what) {
    Int v;
    if (j.is_string()) {
        v = parse_int(j.get<std::string>());
    } else if (j.is_number_integer()) {
        v = Int(j.get<long long>());
    } else {
        throw std::invalid_argument(what + ": count must be a decimal string or integer");
    }
    if (v < 0) throw std::invalid_argument(what + ": count must be nonnegative");
    return v;
}

json colours_to_json(const std::vector<int>& colours) { return json(colours); }

std::vector<int> colours_from_json(const json& j, int order) {
    if (!j.is_array()) throw std::invalid_argument("instance JSON: colours must be an array");
    std::vector<int> colours;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw std::invalid_argument("instance JSON: colour entries must be integers");
        colours.push_back(c.get<int>());
    }
    if (static_cast<int>(colours.size()) != order)
        throw std::invalid_argument("instance JSON: colour array length must equal the graph order");
    return colours;
}

json labels_to_json(const std::map<int, int>& labels) {
    json out = json::object();
    for (auto [label, vertex] : labels) out[std::to_string(label)] = vertex;
    return out;
}

std::map<int, int> labels_from_json(const json& j, int order) {
    if (!j.is_object()) throw std::invalid_argument("instance JSON: labels must be an object");
    std::map<int, int> labels;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int label;
        try {
            size_t used = 0;
            label = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("instance JSON: label keys must be integers, got \"" + it.key() + "\"");
        }
        if (!it.value().is_number_integer())
            throw std::invalid_argument("instance JSON: label values must be vertex indices");
        int vertex = it.value().get<int>();
        if (vertex < 0 || vertex >= order)
            throw std::invalid_argument("instance JSON: label vertex out of range");
        labels[label] = vertex;
    }
    return labels;
}

}  // namespace

std::string to_string(CountKind k) { return k == CountKind::hom ? "hom" : "sub"; }

std::string to_string(GraphKind k) {
    switch (k) {
        case GraphKind::plain: return "plain";
        case GraphKind::coloured: return "coloured";
        default: return "labelled";
    }
}

CountKind count_kind_from_string(const std::string& s) {
    if (s == "hom") return CountKind::hom;
    if (s == "sub") return CountKind::sub;
    throw std::invalid_argument("unknown count kind: " + s);
}

GraphKind graph_kind_from_string(const std::string& s) {
    if (s == "plain") return GraphKind::plain;
    if (s == "coloured") return GraphKind::coloured;
    if (s == "labelled") return GraphKind::labelled;
    throw std::invalid_argument("unknown graph kind: " + s);
}

const Graph& pattern_graph(const PatternGraph& p) {
    return std::visit([](const auto& g) -> const Graph& {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Graph>) return g;
        else return g.graph;
    }, p);
}

void validate(const Instance& inst) {
    if (inst.constraints.empty()) throw std::invalid_argument("instance: no constraints");
    if (inst.size_bound && *inst.size_bound < 0)
        throw std::invalid_argument("instance: negative size bound");
    for (const Constraint& c : inst.constraints) {
        size_t want = inst.graph_kind == GraphKind::plain ? 0
                    : inst.graph_kind == GraphKind::coloured ? 1 : 2;
        if (c.pattern.index() != want)
            throw std::invalid_argument("instance: pattern flavour does not match the instance graph kind");
        if (c.count < 0) throw std::invalid_argument("instance: negative count");
        if (const auto* cg = std::get_if<ColouredGraph>(&c.pattern)) {
            if (static_cast<int>(cg->colours.size()) != cg->order())
                throw std::invalid_argument("instance: colour array length must equal the graph order");
        }
        if (const auto* lg = std::get_if<LabelledGraph>(&c.pattern)) {
            for (auto [label, vertex] : lg->labels)
                if (vertex < 0 || vertex >= lg->order())
                    throw std::invalid_argument("instance: label vertex out of range");
        }
    }
}

Int constraint_count(CountKind kind, const PatternGraph& pattern, const Host& host) {
    if (const auto* g = std::get_if<Graph>(&pattern))
        return kind == CountKind::hom ? hom_count(*g, host.graph) : sub_count(*g, host.graph);
    if (const auto* cg = std::get_if<ColouredGraph>(&pattern)) {
        if (static_cast<int>(host.colours.size()) != host.graph.order())
            throw std::invalid_argument("constraint_count: host lacks a colouring");
        ColouredGraph h{host.graph, host.colours};
        return kind == CountKind::hom ? hom_count(*cg, h) : sub_count(*cg, h);
    }
    const auto& lg = std::get<LabelledGraph>(pattern);
    if (kind == CountKind::sub)
        throw std::invalid_argument("constraint_count: sub counts with labelled patterns are not supported");
    LabelledGraph h{host.graph, host.labels};
    return hom_count(lg, h);
}

bool satisfies(const Instance& inst, const Host& host) {
    for (const Constraint& c : inst.constraints)
        if (constraint_count(inst.kind, c.pattern, host) != c.count) return false;
    return true;
}

std::string to_json(const Instance& inst) {
    validate(inst);
    json out;
    out["kind"] = to_string(inst.kind);
    out["graph_kind"] = to_string(inst.graph_kind);
    json cs = json::array();
    for (const Constraint& c : inst.constraints) {
        json jc;
        jc["graph6"] = emit_graph6(pattern_graph(c.pattern));
        if (const auto* cg = std::get_if<ColouredGraph>(&c.pattern))
            jc["colours"] = colours_to_json(cg->colours);
        if (const auto* lg = std::get_if<LabelledGraph>(&c.pattern))
            jc["labels"] = labels_to_json(lg->labels);
        jc["count"] = to_string(c.count);
        cs.push_back(std::move(jc));
    }
    out["constraints"] = std::move(cs);
    if (inst.size_bound) out["size_bound"] = *inst.size_bound;
    return out.dump(2);
}

Instance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("instance JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("instance JSON: top level must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "kind" && k != "graph_kind" && k != "constraints" && k != "size_bound")
            throw std::invalid_argument("instance JSON: unknown key \"" + k + "\"");
    }
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("instance JSON: missing string field \"kind\"");
    if (!j.contains("graph_kind") || !j["graph_kind"].is_string())
        throw std::invalid_argument("instance JSON: missing string field \"graph_kind\"");
    if (!j.contains("constraints") || !j["constraints"].is_array())
        throw std::invalid_argument("instance JSON: missing array field \"constraints\"");

    Instance inst;
    inst.kind = count_kind_from_string(j["kind"].get<std::string>());
    inst.graph_kind = graph_kind_from_string(j["graph_kind"].get<std::string>());
    for (const json& jc : j["constraints"]) {
        if (!jc.is_object() || !jc.contains("graph6") || !jc["graph6"].is_string() || !jc.contains("count"))
            throw std::invalid_argument("instance JSON: each constraint needs \"graph6\" and \"count\"");
        Graph g = parse_graph6(jc["graph6"].get<std::string>());
        Constraint c;
        c.count = count_from_json(jc["count"], "instance JSON");
        switch (inst.graph_kind) {
            case GraphKind::plain:
                if (jc.contains("colours") || jc.contains("labels"))
                    throw std::invalid_argument("instance JSON: plain constraints take no colours or labels");
                c.pattern = std::move(g);
                break;
            case GraphKind::coloured: {
                if (!jc.contains("colours"))
                    throw std::invalid_argument("instance JSON: coloured constraints need a colour array");
                int order = g.order();
                c.pattern = ColouredGraph{std::move(g), colours_from_json(jc["colours"], order)};
                break;
            }
            case GraphKind::labelled: {
                if (!jc.contains("labels"))
                    throw std::invalid_argument("instance JSON: labelled constraints need a label object");
                int order = g.order();
                c.pattern = LabelledGraph{std::move(g), labels_from_json(jc["labels"], order)};
                break;
            }
        }
        inst.constraints.push_back(std::move(c));
    }
    if (j.contains("size_bound")) {
        if (!j["size_bound"].is_number_integer() || j["size_bound"].get<long long>() < 0)
            throw std::invalid_argument("instance JSON: size_bound must be a nonnegative integer");
        inst.size_bound = j["size_bound"].get<int>();
    }
    validate(inst);
    return inst;
}

std::string recipe_to_json(const Recipe& recipe) {
    json out = json::array();
    for (const RecipeItem& item : recipe) {
        json ji;
        ji["graph6"] = emit_graph6(item.host);
        ji["multiplicity"] = to_string(item.multiplicity);
        out.push_back(std::move(ji));
    }
    return out.dump(2);
}

Recipe recipe_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("recipe JSON: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("recipe JSON: top level must be an array");
    Recipe recipe;
    for (const json& ji : j) {
        if (!ji.is_object() || !ji.contains("graph6") || !ji["graph6"].is_string() || !ji.contains("multiplicity"))
            throw std::invalid_argument("recipe JSON: each item needs \"graph6\" and \"multiplicity\"");
        RecipeItem item;
        item.host = parse_graph6(ji["graph6"].get<std::string>());
        item.multiplicity = count_from_json(ji["multiplicity"], "recipe JSON");
        recipe.push_back(std::move(item));
    }
    return recipe;
}

Graph realize_recipe(const Recipe& recipe, int max_order) {
    Int total = 0;
    for (const RecipeItem& item : recipe) {
        if (item.multiplicity < 0) throw std::invalid_argument("realize_recipe: negative multiplicity");
        total += item.multiplicity * item.host.order();
    }
    if (total > max_order)
        throw std::invalid_argument("realize_recipe: " + to_string(total) + " vertices exceeds the cap");
    Graph out(static_cast<int>(total));
    int offset = 0;
    for (const RecipeItem& item : recipe) {
        long long copies = static_cast<long long>(item.multiplicity);
        for (long long i = 0; i < copies; ++i) {
            for (auto [u, v] : item.host.edges()) out.add_edge(offset + u, offset + v);
            offset += item.host.order();
        }
    }
    return out;
}

}  // namespace homrec
