#include "homrec/reductions.hpp"

#include "homrec/canonical.hpp"
#include "homrec/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace homrec {

namespace {

// Star with the given root colour and one leaf per entry of leaf_colours.
ColouredGraph colour_star(int root_colour, const std::vector<int>& leaf_colours) {
    int n = static_cast<int>(leaf_colours.size()) + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    std::vector<int> colours{root_colour};
    colours.insert(colours.end(), leaf_colours.begin(), leaf_colours.end());
    return ColouredGraph{make_graph(n, edges), colours};
}

ColouredGraph colour_union(const std::vector<ColouredGraph>& parts) {
    ColouredGraph out;
    for (const ColouredGraph& p : parts) {
        out.graph = disjoint_union(out.graph, p.graph);
        out.colours.insert(out.colours.end(), p.colours.begin(), p.colours.end());
    }
    return out;
}

void validate_setsplitting(const SetSplittingInput& input) {
    if (input.ground_size < 1)
        throw std::invalid_argument("set splitting: ground set must be nonempty");
    for (const std::set<int>& subset : input.collection) {
        if (subset.empty()) throw std::invalid_argument("set splitting: empty subset");
        for (int e : subset)
            if (e < 1 || e > input.ground_size)
                throw std::invalid_argument("set splitting: element outside the ground set");
    }
}

}  // namespace

Instance gen_setsplitting(const SetSplittingInput& input) {
    validate_setsplitting(input);
    int k = input.ground_size;
    int B = k, E = k + 1, P = k + 2;

    std::vector<ColouredGraph> f1_parts;
    std::vector<int> everything{E};
    for (int i = 1; i <= k; ++i) everything.push_back(i - 1);
    f1_parts.push_back(colour_star(B, everything));
    for (int i = 1; i <= k; ++i) f1_parts.push_back(colour_star(B, {i - 1, P}));
    for (const std::set<int>& subset : input.collection) {
        std::vector<int> leaves;
        for (int e : subset) leaves.push_back(e - 1);
        f1_parts.push_back(colour_star(B, leaves));
    }

    Instance inst;
    inst.kind = CountKind::hom;
    inst.graph_kind = GraphKind::coloured;
    inst.constraints.push_back({colour_union(f1_parts), 1});
    inst.constraints.push_back({colour_star(B, {P}), 2});
    inst.constraints.push_back({colour_star(B, {E, P}), 0});
    inst.size_bound = 2 * k + 6;
    return inst;
}

ColouredGraph setsplitting_witness(const std::set<int>& s1, const std::set<int>& s2,
                                   const SetSplittingInput& input) {
    validate_setsplitting(input);
    int k = input.ground_size;
    for (int e : s1)
        if (s2.count(e)) throw std::invalid_argument("set splitting witness: sides overlap");
    for (const std::set<int>* side : {&s1, &s2})
        for (int e : *side)
            if (e < 1 || e > k)
                throw std::invalid_argument("set splitting witness: element outside the ground set");
    if (static_cast<int>(s1.size() + s2.size()) != k)
        throw std::invalid_argument("set splitting witness: sides do not cover the ground set");

    int B = k, E = k + 1, P = k + 2;
    std::vector<int> everything{E};
    for (int i = 1; i <= k; ++i) everything.push_back(i - 1);
    std::vector<ColouredGraph> parts{colour_star(B, everything)};
    for (const std::set<int>* side : {&s1, &s2}) {
        std::vector<int> leaves{P};
        for (int e : *side) leaves.push_back(e - 1);
        parts.push_back(colour_star(B, leaves));
    }
    return colour_union(parts);
}

std::pair<std::set<int>, std::set<int>> setsplitting_extract(const ColouredGraph& host,
                                                             const SetSplittingInput& input) {
    Instance inst = gen_setsplitting(input);
    Host h{host.graph, host.colours, {}};
    if (!satisfies(inst, h))
        throw std::invalid_argument("set splitting extract: host fails the generated constraints");

    int k = input.ground_size;
    int B = k, P = k + 2;
    std::vector<int> side_roots;
    for (int u = 0; u < host.order(); ++u) {
        if (host.colours[u] != B) continue;
        for (int v = 0; v < host.order(); ++v)
            if (host.colours[v] == P && host.graph.adjacent(u, v)) side_roots.push_back(u);
    }
    // hom(B-P edge) = 2 and the per-element counts rule out one root with two
    // P-neighbours (its contributions would all be even), so two distinct side
    // stars always exist in a satisfying host.
    if (side_roots.size() != 2 || side_roots[0] == side_roots[1])
        throw std::runtime_error("set splitting extract: side stars not separated");

    std::pair<std::set<int>, std::set<int>> split;
    for (int i = 1; i <= k; ++i) {
        bool first = false, second = false;
        for (int v = 0; v < host.order(); ++v) {
            if (host.colours[v] != i - 1) continue;
            first = first || host.graph.adjacent(side_roots[0], v);
            second = second || host.graph.adjacent(side_roots[1], v);
        }
        if (first == second)
            throw std::runtime_error("set splitting extract: element not on exactly one side");
        (first ? split.first : split.second).insert(i);
    }
    for (const std::set<int>& subset : input.collection) {
        auto inside = [&](const std::set<int>& side) {
            return std::all_of(subset.begin(), subset.end(),
                               [&](int e) { return side.count(e) > 0; });
        };
        if (inside(split.first) || inside(split.second))
            throw std::runtime_error("set splitting extract: extracted sides fail to split");
    }
    return split;
}

// ---- quadratic polynomial solvability --------------------------------------

namespace {

// qpoly colour layout
constexpr int kR = 0, kA = 1, kX = 2, kB = 3, kY = 4, kM1 = 5, kM2 = 6;

}  // namespace

Instance gen_qpoly(const QPolyInput& input) {
    if (input.a < 0 || input.b < 0 || input.c < 0)
        throw std::invalid_argument("qpoly: coefficients must be nonnegative");
    Instance inst;
    inst.kind = CountKind::hom;
    inst.graph_kind = GraphKind::coloured;
    inst.constraints = {
        {colour_star(kR, {kA}), input.a + 1},
        {colour_star(kR, {kB}), input.b + 1},
        {colour_star(kR, {kA, kX, kX, kB, kY}), input.c},
        {colour_star(kR, {}), 2},
        {colour_star(kR, {kM1}), 1},
        {colour_star(kR, {kM2}), 1},
        {colour_star(kR, {kM1, kM2}), 0},
        {colour_star(kR, {kM1, kB, kY}), 1},
        {colour_star(kR, {kM2, kA, kX}), 1},
    };
    return inst;
}

ColouredGraph qpoly_witness(const Int& a, const Int& b, const Int& x, const Int& y,
                            int max_order) {
    for (const Int* v : {&a, &b, &x, &y})
        if (*v < 0) throw std::invalid_argument("qpoly witness: negative entry");
    Int order = a + b + x + y + 8;
    if (order > max_order)
        throw std::invalid_argument("qpoly witness: graph of " + to_string(order) +
                                    " vertices exceeds the materialization cap");
    auto repeat = [](std::vector<int>& leaves, int colour, const Int& times) {
        for (Int i = 0; i < times; ++i) leaves.push_back(colour);
    };
    std::vector<int> first{kM1, kB, kY};
    repeat(first, kA, a);
    repeat(first, kX, x);
    std::vector<int> second{kM2, kA, kX};
    repeat(second, kB, b);
    repeat(second, kY, y);
    return colour_union({colour_star(kR, first), colour_star(kR, second)});
}

BPolyInput qpoly_to_bpoly(const QPolyInput& input) {
    if (input.a < 0 || input.b < 0 || input.c < 0)
        throw std::invalid_argument("qpoly: coefficients must be nonnegative");
    if (input.c < input.a)
        throw std::invalid_argument("qpoly_to_bpoly: requires c >= a");
    return BPolyInput{4 * input.a, input.b, input.c - input.a};
}

// ---- exact-count 3-colouring ------------------------------------------------

Instance gen_ec3col(const EC3ColInput& input) {
    std::set<int> seen;
    for (int v : input.special) {
        if (v < 0 || v >= input.graph.order())
            throw std::invalid_argument("ec3col: special vertex out of range");
        if (!seen.insert(v).second)
            throw std::invalid_argument("ec3col: repeated special vertex");
    }
    if (input.k < 0) throw std::invalid_argument("ec3col: negative count");

    LabelledGraph decorated{input.graph, {}};
    for (std::size_t i = 0; i < input.special.size(); ++i)
        decorated.labels[static_cast<int>(i)] = input.special[i];

    Instance inst;
    inst.kind = CountKind::hom;
    inst.graph_kind = GraphKind::labelled;
    inst.constraints.push_back({decorated, input.k});
    inst.constraints.push_back({LabelledGraph{make_graph(1, {}), {}}, 3});
    inst.constraints.push_back({LabelledGraph{make_graph(2, {{0, 1}}), {}}, 6});
    for (std::size_t i = 0; i < input.special.size(); ++i)
        inst.constraints.push_back(
            {LabelledGraph{make_graph(1, {}), {{static_cast<int>(i), 0}}}, 1});
    inst.size_bound = 3;
    return inst;
}

LabelledGraph ec3col_witness(const EC3ColInput& input, const std::vector<std::set<int>>& parts) {
    if (parts.size() > 3)
        throw std::invalid_argument("ec3col witness: more than three parts");
    std::size_t m = input.special.size();
    std::vector<char> placed(m, 0);
    LabelledGraph host{make_graph(3, {{0, 1}, {0, 2}, {1, 2}}), {}};
    for (std::size_t j = 0; j < parts.size(); ++j)
        for (int label : parts[j]) {
            if (label < 0 || static_cast<std::size_t>(label) >= m || placed[label])
                throw std::invalid_argument("ec3col witness: parts must partition the labels");
            placed[label] = 1;
            host.labels[label] = static_cast<int>(j);
        }
    if (std::find(placed.begin(), placed.end(), 0) != placed.end())
        throw std::invalid_argument("ec3col witness: parts must partition the labels");
    return host;
}

// ---- Kneser gadget families ---------------------------------------------------

namespace {

void validate_spec(const KneserSpec& spec) {
    if (spec.r < 1 || spec.s <= 2 * spec.r)
        throw std::invalid_argument("kneser spec: requires 1 <= r and 2r < s");
}

}  // namespace

int kneser_chromatic(const KneserSpec& spec) {
    validate_spec(spec);
    return spec.s - 2 * spec.r + 2;
}

int kneser_odd_girth(const KneserSpec& spec) {
    validate_spec(spec);
    if (spec.s >= 3 * spec.r) return 3;
    int d = spec.s - 2 * spec.r;
    return 2 * ((spec.r + d - 1) / d) + 1;
}

void certify_incomparable(const std::vector<KneserSpec>& specs) {
    std::vector<std::pair<int, int>> pairs;  // (chi, odd girth)
    for (const KneserSpec& spec : specs)
        pairs.push_back({kneser_chromatic(spec), kneser_odd_girth(spec)});
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i - 1].first)
            throw std::invalid_argument(
                "incomparability certificate: two members share chromatic number " +
                std::to_string(pairs[i].first));
        if (pairs[i].second <= pairs[i - 1].second)
            throw std::invalid_argument(
                "incomparability certificate: odd girth falls from " +
                std::to_string(pairs[i - 1].second) + " to " + std::to_string(pairs[i].second) +
                " while the chromatic number climbs, leaving one direction unrefuted");
    }
}

std::vector<KneserSpec> suggest_parametric_roles(int count) {
    if (count < 1) throw std::invalid_argument("suggest_parametric_roles: count must be positive");
    // K(k(n-2), (2k+1)(n-2)) has chromatic number n and odd girth 2k+1, so a
    // certified chain needs n and k strictly increasing; the orders grow in
    // both, making the diagonal n = 3,4,... with k = 1,2,... order-smallest.
    std::vector<KneserSpec> out;
    for (int i = 0; i < count; ++i) {
        int n = 3 + i, k = 1 + i;
        out.push_back({k * (n - 2), (2 * k + 1) * (n - 2)});
    }
    certify_incomparable(out);
    return out;
}

const GadgetRole& GadgetFamily::role(const std::string& name) const {
    for (const GadgetRole& member : members)
        if (member.name == name) return member;
    throw std::invalid_argument("gadget family: no role named " + name);
}

bool GadgetFamily::has_role(const std::string& name) const {
    for (const GadgetRole& member : members)
        if (member.name == name) return true;
    return false;
}

GadgetFamily build_gadget_family(const GadgetFamilySpec& spec) {
    if (spec.roles.empty()) throw std::invalid_argument("gadget family: no roles");
    std::set<std::string> names;
    std::vector<KneserSpec> specs;
    for (const auto& [name, kspec] : spec.roles) {
        if (name.empty() || !names.insert(name).second)
            throw std::invalid_argument("gadget family: role names must be distinct and nonempty");
        validate_spec(kspec);
        Int order = binomial(Int(kspec.s), static_cast<unsigned>(kspec.r));
        if (order > spec.max_order)
            throw std::invalid_argument("gadget family: K(" + std::to_string(kspec.r) + "," +
                                        std::to_string(kspec.s) + ") has " + to_string(order) +
                                        " vertices, beyond the materialization cap");
        specs.push_back(kspec);
    }
    if (spec.require_certificate) certify_incomparable(specs);

    GadgetFamily family;
    for (const auto& [name, kspec] : spec.roles) {
        GadgetRole role;
        role.name = name;
        role.spec = kspec;
        role.graph = kneser(kspec.r, kspec.s);
        role.tip = 0;
        role.chromatic = kneser_chromatic(kspec);
        role.odd_girth = kneser_odd_girth(kspec);
        if (!is_connected(role.graph))
            throw std::runtime_error("gadget family: member not connected");
        role.tip_aut = pinned_aut_count(role.graph, role.tip, spec.aut_budget);
        family.max_member_order = std::max(family.max_member_order, role.graph.order());
        family.members.push_back(std::move(role));
    }
    return family;
}

// ---- homomorphic images -------------------------------------------------------

namespace {

// g with non-adjacent u, v merged (v folded into u, then v dropped).
Graph identify(const Graph& g, int u, int v) {
    int n = g.order();
    std::vector<int> map(n);
    for (int w = 0, next = 0; w < n; ++w) map[w] = w == v ? -1 : next++;
    map[v] = map[u];
    Graph out(n - 1);
    for (auto [p, q] : g.edges()) {
        int a = map[p], b = map[q];
        if (!out.adjacent(a, b)) out.add_edge(a, b);
    }
    return out;
}

}  // namespace

std::optional<std::vector<Graph>> noninjective_images(const Graph& g, std::size_t cap) {
    // Images are deduplicated by canonical code, which caps the order at 64.
    if (g.order() > 65) return std::nullopt;
    std::vector<Graph> images;
    std::unordered_set<CanonicalCode> seen;
    std::vector<Graph> frontier{g};
    while (!frontier.empty()) {
        std::vector<Graph> next;
        for (const Graph& cur : frontier)
            for (int u = 0; u < cur.order(); ++u)
                for (int v = u + 1; v < cur.order(); ++v) {
                    if (cur.adjacent(u, v)) continue;
                    Graph image = identify(cur, u, v);
                    if (!seen.insert(canonical_code(image)).second) continue;
                    if (images.size() == cap) return std::nullopt;
                    images.push_back(image);
                    next.push_back(image);
                }
        frontier = std::move(next);
    }
    return images;
}

ImageConstraints family_image_constraints(const GadgetFamily& family, std::size_t cap) {
    ImageConstraints out;
    std::unordered_set<CanonicalCode> seen;
    for (const GadgetRole& member : family.members) {
        auto images = noninjective_images(member.graph, cap);
        if (!images) {
            out.pending.push_back(member.name);
            continue;
        }
        for (Graph& image : *images)
            if (seen.insert(canonical_code(image)).second) out.images.push_back(std::move(image));
    }
    out.executable = out.pending.empty();
    return out;
}

// ---- gadget encoders -----------------------------------------------------------

namespace {

// Incremental assembly of the big encoded graphs.
struct GraphBuilder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int add_vertex() { return n++; }

    void add_edge(int u, int v) { edges.push_back({u, v}); }

    // Path of `length` edges between existing vertices, adding length-1 fresh
    // internal vertices.
    void add_path(int from, int to, int length) {
        int prev = from;
        for (int i = 1; i < length; ++i) {
            int mid = add_vertex();
            add_edge(prev, mid);
            prev = mid;
        }
        add_edge(prev, to);
    }

    // Disjoint copy of g; returns the index its vertex 0 landed on.
    int add_copy(const Graph& g) {
        int base = n;
        n += g.order();
        for (auto [u, v] : g.edges()) add_edge(base + u, base + v);
        return base;
    }

    Graph build() const { return make_graph(n, edges); }
};

// Hangs the tips of roles I0/I1 on 2l-paths off v.
void add_indicator(GraphBuilder& b, int v, const GadgetFamily& family) {
    int l = family.max_member_order;
    for (const char* name : {"I0", "I1"}) {
        const GadgetRole& role = family.role(name);
        int base = b.add_copy(role.graph);
        b.add_path(v, base + role.tip, 2 * l);
    }
}

// The arc gadget: tail -10l- x -2l- y -10l- head with the D0 tip hung off x
// and the D1 tip hung off y on 2l-paths.
void add_direction(GraphBuilder& b, int tail, int head, const GadgetFamily& family) {
    int l = family.max_member_order;
    const GadgetRole& d0 = family.role("D0");
    const GadgetRole& d1 = family.role("D1");
    int x = b.add_vertex();
    int y = b.add_vertex();
    b.add_path(tail, x, 10 * l);
    int b0 = b.add_copy(d0.graph);
    b.add_path(x, b0 + d0.tip, 2 * l);
    b.add_path(x, y, 2 * l);
    int b1 = b.add_copy(d1.graph);
    b.add_path(y, b1 + d1.tip, 2 * l);
    b.add_path(y, head, 10 * l);
}

Int int_pow(const Int& base, std::size_t exp) {
    Int out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

std::pair<Graph, Int> encode_directed(const DirectedGraph& f, const GadgetFamily& family) {
    if (f.order < 0) throw std::invalid_argument("encode_directed: negative order");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : f.arcs) {
        if (u < 0 || u >= f.order || v < 0 || v >= f.order)
            throw std::invalid_argument("encode_directed: arc endpoint out of range");
        if (u == v) throw std::invalid_argument("encode_directed: loops not supported");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("encode_directed: repeated arc");
    }
    for (const char* name : {"I0", "I1", "D0", "D1"})
        if (!family.has_role(name))
            throw std::invalid_argument(std::string("encode_directed: family lacks role ") + name);

    GraphBuilder b;
    for (int v = 0; v < f.order; ++v) b.add_vertex();
    for (int v = 0; v < f.order; ++v) add_indicator(b, v, family);
    for (auto [u, v] : f.arcs) add_direction(b, u, v, family);

    Int per_arc = Int(family.role("D0").tip_aut) * family.role("D1").tip_aut;
    Int per_vertex = Int(family.role("I0").tip_aut) * family.role("I1").tip_aut;
    return {b.build(), int_pow(per_arc, f.arcs.size()) * int_pow(per_vertex, f.order)};
}

std::pair<Graph, Int> encode_labelled(const LabelledGraph& h, const GadgetFamily& family,
                                      const Int& count) {
    for (const auto& [label, vertex] : h.labels) {
        if (label < 0) throw std::invalid_argument("encode_labelled: negative label id");
        if (vertex < 0 || vertex >= h.graph.order())
            throw std::invalid_argument("encode_labelled: labelled vertex out of range");
    }
    for (const char* name : {"I0", "I1", "D0", "D1", "A", "Z", "0", "1"})
        if (!family.has_role(name))
            throw std::invalid_argument(std::string("encode_labelled: family lacks role ") + name);

    int width = 1;
    for (const auto& [label, vertex] : h.labels)
        while ((label >> width) != 0) ++width;

    int l = family.max_member_order;
    GraphBuilder b;
    for (int v = 0; v < h.graph.order(); ++v) b.add_vertex();
    for (int v = 0; v < h.graph.order(); ++v) add_indicator(b, v, family);
    for (auto [u, v] : h.graph.edges()) {
        add_direction(b, u, v, family);
        add_direction(b, v, u, family);
    }
    Int chain_mult = 1;
    for (const auto& [label, vertex] : h.labels) {
        std::vector<std::string> chain{"A"};
        for (int bit = width - 1; bit >= 0; --bit)
            chain.push_back((label >> bit) & 1 ? "1" : "0");
        chain.push_back("Z");
        int prev = vertex;
        for (const std::string& name : chain) {
            const GadgetRole& role = family.role(name);
            int base = b.add_copy(role.graph);
            b.add_path(prev, base + role.tip, 2 * l);
            prev = base + role.tip;
            chain_mult *= role.tip_aut;
        }
    }

    Int per_vertex = Int(family.role("I0").tip_aut) * family.role("I1").tip_aut;
    Int per_edge_once = Int(family.role("D0").tip_aut) * family.role("D1").tip_aut;
    Int per_edge = per_edge_once * per_edge_once;  // two opposing gadgets per edge
    Int multiplier = int_pow(per_vertex, static_cast<std::size_t>(h.graph.order())) *
                     int_pow(per_edge, static_cast<std::size_t>(h.graph.edge_count())) *
                     chain_mult;
    return {b.build(), count * multiplier};
}

}  // namespace homrec
