#include "homrec/decide.hpp"

#include "homrec/canonical.hpp"
#include "homrec/counting.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace homrec {

namespace {

Verdict yes(Host witness) {
    Verdict v;
    v.status = Status::yes;
    v.witness = std::move(witness);
    return v;
}

Verdict no() {
    Verdict v;
    v.status = Status::no;
    return v;
}

Verdict unknown(std::string reason, Int bound) {
    Verdict v;
    v.status = Status::unknown;
    v.reason = std::move(reason);
    v.bound = std::move(bound);
    return v;
}

// Counts only grow when a host gains vertices or edges, so a partial host that
// already exceeds some target can be pruned with its whole augmentation subtree.
bool within_targets(const Instance& inst, const Host& host) {
    for (const Constraint& c : inst.constraints)
        if (constraint_count(inst.kind, c.pattern, host) > c.count) return false;
    return true;
}

// hom counts multiply over pattern components, so hom(F) = 1 forces every
// component count to be exactly 1. Splitting such constraints keeps the same
// satisfying hosts while giving the monotone pruning much sharper targets (a
// zero factor no longer masks another component's runaway count). Constraints
// are then ordered smallest pattern first so cheap screens run before big ones.
Instance split_unit_hom_constraints(const Instance& inst) {
    Instance out = inst;
    if (inst.kind == CountKind::hom && inst.graph_kind != GraphKind::labelled) {
        out.constraints.clear();
        for (const Constraint& c : inst.constraints) {
            const Graph& shape = pattern_graph(c.pattern);
            auto comps = connected_components(shape);
            if (c.count != 1 || comps.size() <= 1) {
                out.constraints.push_back(c);
                continue;
            }
            for (const auto& comp : comps) {
                Constraint piece;
                piece.count = 1;
                if (inst.graph_kind == GraphKind::plain) {
                    piece.pattern = induced_subgraph(shape, comp);
                } else {
                    const auto& cg = std::get<ColouredGraph>(c.pattern);
                    ColouredGraph part;
                    part.graph = induced_subgraph(shape, comp);
                    for (int v : comp) part.colours.push_back(cg.colours[v]);
                    piece.pattern = std::move(part);
                }
                out.constraints.push_back(std::move(piece));
            }
        }
    }
    std::stable_sort(out.constraints.begin(), out.constraints.end(),
                     [](const Constraint& a, const Constraint& b) {
                         return pattern_graph(a.pattern).order() < pattern_graph(b.pattern).order();
                     });
    return out;
}

Verdict decide_plain(const Instance& inst, int bound, const SearchCaps& caps) {
    if (bound > caps.plain_order)
        return unknown("size bound exceeds the exhaustive enumeration cap", Int(bound));
    auto keep = [&](const Graph& g) { return within_targets(inst, Host{g, {}, {}}); };
    std::vector<Graph> level{Graph(0)};
    if (!keep(level[0])) level.clear();
    for (int n = 0;; ++n) {
        for (const Graph& g : level) {
            Host h{g, {}, {}};
            if (satisfies(inst, h)) return yes(std::move(h));
        }
        if (n == bound) break;
        level = augmentation_children(level, keep);
    }
    return no();
}

Verdict decide_coloured(const Instance& inst, int bound, const SearchCaps& caps) {
    std::set<int> palette_set;
    for (const Constraint& c : inst.constraints)
        for (int colour : std::get<ColouredGraph>(c.pattern).colours) palette_set.insert(colour);
    std::vector<int> palette(palette_set.begin(), palette_set.end());

    // A pattern colour absent from the host pins that pattern's count at zero,
    // so any constraint with a positive target needs all its colours present in
    // the finished host. Each augmentation step adds one vertex (one colour),
    // which makes "more colours missing than vertices left" a monotone prune.
    std::set<int> required_set;
    for (const Constraint& c : inst.constraints)
        if (c.count >= 1)
            for (int colour : std::get<ColouredGraph>(c.pattern).colours) required_set.insert(colour);
    std::vector<int> required(required_set.begin(), required_set.end());

    // Colour-preserving maps send pattern edges to host edges with the same
    // endpoint colours, so a host edge whose colour pair occurs in no pattern is
    // invisible to every hom and sub count. Deleting all such edges from any
    // satisfying host leaves a satisfying host, hence searching only hosts built
    // from these "active" colour pairs is complete — and vastly smaller.
    std::set<std::pair<int, int>> active;
    for (const Constraint& c : inst.constraints) {
        const auto& cg = std::get<ColouredGraph>(c.pattern);
        for (auto [u, v] : cg.graph.edges())
            active.insert(std::minmax(cg.colours[u], cg.colours[v]));
    }
    auto allowed_nbrs = [&active](const ColouredGraph& parent, int colour) {
        uint64_t mask = 0;
        for (int v = 0; v < parent.order(); ++v)
            if (active.count(std::minmax(colour, parent.colours[v])))
                mask |= uint64_t(1) << v;
        return mask;
    };

    uint64_t attempts = caps.attempts;
    auto keep = [&](const ColouredGraph& g) {
        int missing = 0;
        for (int colour : required)
            if (std::find(g.colours.begin(), g.colours.end(), colour) == g.colours.end()) ++missing;
        if (missing > bound - g.order()) return false;
        return within_targets(inst, Host{g.graph, g.colours, {}});
    };
    std::vector<ColouredGraph> level{ColouredGraph{Graph(0), {}}};
    if (!keep(level[0])) level.clear();
    for (int n = 0;; ++n) {
        for (const ColouredGraph& g : level) {
            Host h{g.graph, g.colours, {}};
            if (satisfies(inst, h)) return yes(std::move(h));
        }
        if (n == bound) break;
        try {
            if (n + 1 == bound) {
                // Last level: only existence matters, so stream raw candidates
                // instead of paying canonical dedup on the widest level. Any
                // satisfying host of full order loses one vertex to a kept
                // parent class, so the stream covers every candidate class.
                Verdict found = no();
                augmentation_candidates(
                    level, palette, keep,
                    [&](const ColouredGraph& g) {
                        Host h{g.graph, g.colours, {}};
                        if (!satisfies(inst, h)) return true;
                        found = yes(std::move(h));
                        return false;
                    },
                    &attempts, allowed_nbrs);
                return found;
            }
            level = augmentation_children(level, palette, keep, &attempts, allowed_nbrs);
        } catch (const budget_exhausted&) {
            return unknown("attempt budget exhausted while growing hosts of order " +
                               std::to_string(n + 1),
                           Int(bound));
        }
    }
    return no();
}

Verdict decide_labelled(const Instance& inst, int bound, const SearchCaps& caps) {
    std::set<int> label_set;
    for (const Constraint& c : inst.constraints)
        for (auto [label, vertex] : std::get<LabelledGraph>(c.pattern).labels)
            label_set.insert(label);
    std::vector<int> ids(label_set.begin(), label_set.end());
    int k = static_cast<int>(ids.size());

    uint64_t attempts = caps.attempts;
    std::vector<Graph> level{Graph(0)};
    for (int n = 0;; ++n) {
        for (const Graph& shape : level) {
            if (k > 0 && n == 0) continue;  // no vertex can carry the labels
            std::vector<int> slot(k, 0);
            while (true) {
                if (attempts == 0)
                    return unknown("attempt budget exhausted while placing labels on hosts of order " +
                                       std::to_string(n),
                                   Int(bound));
                --attempts;
                Host h{shape, {}, {}};
                for (int i = 0; i < k; ++i) h.labels[ids[i]] = slot[i];
                if (satisfies(inst, h)) return yes(std::move(h));
                int i = 0;
                while (i < k && ++slot[i] == n) slot[i++] = 0;
                if (i == k) break;
            }
        }
        if (n == bound) break;
        try {
            level = augmentation_children(level, [](const Graph&) { return true; }, &attempts);
        } catch (const budget_exhausted&) {
            return unknown("attempt budget exhausted while growing hosts of order " +
                               std::to_string(n + 1),
                           Int(bound));
        }
    }
    return no();
}

}  // namespace

Verdict decide_bounded(const Instance& inst, const SearchCaps& caps) {
    validate(inst);
    if (!inst.size_bound) throw std::invalid_argument("decide_bounded: instance has no size bound");
    int bound = *inst.size_bound;
    Instance work = split_unit_hom_constraints(inst);
    switch (inst.graph_kind) {
        case GraphKind::plain: return decide_plain(work, bound, caps);
        case GraphKind::coloured: return decide_coloured(work, bound, caps);
        default: return decide_labelled(work, bound, caps);
    }
}

Verdict decide_unbounded(const Instance& inst, const SearchCaps& caps) {
    validate(inst);
    if (inst.graph_kind != GraphKind::plain)
        throw std::invalid_argument("decide_unbounded: plain instances only");
    Int derived = 0;
    for (const Constraint& c : inst.constraints)
        derived += c.count * pattern_graph(c.pattern).order();
    if (derived > caps.plain_order)
        return unknown("derived search bound exceeds the exhaustive enumeration cap", derived);
    Instance capped = split_unit_hom_constraints(inst);
    capped.size_bound = static_cast<int>(derived);
    return decide_plain(capped, *capped.size_bound, caps);
}

std::vector<std::vector<Int>> region_map(int n, const std::vector<Graph>& patterns,
                                         CountKind kind, int threads) {
    if (patterns.empty()) throw std::invalid_argument("region_map: no patterns");
    if (threads < 1) throw std::invalid_argument("region_map: thread count must be positive");
    auto counts_of = [&](const Graph& g) {
        std::vector<Int> row;
        row.reserve(patterns.size());
        for (const Graph& f : patterns)
            row.push_back(kind == CountKind::hom ? hom_count(f, g) : sub_count(f, g));
        return row;
    };
    std::set<std::vector<Int>> rows;
    if (threads == 1) {
        enumerate_nonisomorphic(n, true, [&](const Graph& g) {
            rows.insert(counts_of(g));
            return true;
        });
    } else {
        std::mutex mu;
        enumerate_nonisomorphic_parallel(n, true, threads, [&](int, const Graph& g) {
            std::vector<Int> row = counts_of(g);
            std::lock_guard<std::mutex> lock(mu);
            rows.insert(std::move(row));
        });
    }
    return {rows.begin(), rows.end()};
}

std::string region_csv(size_t width, const std::vector<std::vector<Int>>& rows) {
    std::ostringstream out;
    for (size_t i = 0; i < width; ++i) out << (i ? "," : "") << "v" << (i + 1);
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != width) throw std::invalid_argument("region_csv: row width mismatch");
        for (size_t i = 0; i < width; ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
    return out.str();
}

Int kk_bound(const Int& edge_count) {
    if (edge_count < 0) throw std::invalid_argument("kk_bound: negative edge count");
    if (edge_count == 0) return 0;
    const Int& m = edge_count;
    // largest t with 6t + 3m <= m*sqrt(8m+1), i.e. (6t+3m)^2 <= m^2(8m+1)
    Int target = m * m * (8 * m + 1);
    return search_last_leq(Int(0), [&](const Int& t) { return (6 * t + 3 * m) * (6 * t + 3 * m); },
                           target);
}

bool edge_vertex_feasible(const Int& h1, const Int& h2) {
    if (h1 < 0 || h2 < 0) throw std::invalid_argument("edge_vertex_feasible: negative count");
    return h2 <= h1 * (h1 - 1) && h2 % 2 == 0;
}

}  // namespace homrec
