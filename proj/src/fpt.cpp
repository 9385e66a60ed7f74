#include "homrec/fpt.hpp"

#include "homrec/canonical.hpp"
#include "homrec/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace homrec {

namespace {

// Gap tables are tabulated up to the Bezout threshold; refuse thresholds that
// would not fit in memory.
constexpr unsigned long long kMaxGapTable = 1ull << 26;

Int int_gcd(Int a, Int b) {
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = gcd(a, b) together with x, y such that g == a*x + b*y.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    if (b == 0) {
        g = a;
        x = 1;
        y = 0;
        return;
    }
    Int g1, x1, y1;
    ext_gcd(b, a % b, g1, x1, y1);
    g = g1;
    x = y1;
    y = x1 - (a / b) * y1;
}

FptVerdict yes_with(Recipe recipe, std::string reason) {
    FptVerdict v;
    v.status = Status::yes;
    v.recipe = std::move(recipe);
    v.reason = std::move(reason);
    return v;
}

FptVerdict no_with(std::string reason) {
    FptVerdict v;
    v.status = Status::no;
    v.reason = std::move(reason);
    return v;
}

FptVerdict unknown_with(std::string reason) {
    FptVerdict v;
    v.status = Status::unknown;
    v.reason = std::move(reason);
    return v;
}

// Recipe with multiplicity coefficients[i] of witness i, zeros dropped.
Recipe combination_recipe(const std::vector<Graph>& witnesses, const std::vector<Int>& coefficients) {
    Recipe recipe;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] > 0) recipe.push_back({witnesses[i], coefficients[i]});
    }
    return recipe;
}

struct LinearSystem {
    const std::vector<std::vector<Int>>& A;
    const std::vector<Int>& b;
    size_t rows;
    size_t cols;
    uint64_t nodes_left;
    std::vector<Int> residual;
    std::vector<char> assigned;
    std::vector<Int> x;

    LinearSystem(const std::vector<std::vector<Int>>& A_, const std::vector<Int>& b_, uint64_t budget)
        : A(A_), b(b_), rows(A_.size()), cols(rows ? A_[0].size() : 0), nodes_left(budget) {
        if (rows == 0) throw std::invalid_argument("solve_nonneg_linear: empty system");
        if (b.size() != rows) throw std::invalid_argument("solve_nonneg_linear: matrix/vector size mismatch");
        for (const auto& row : A) {
            if (row.size() != cols) throw std::invalid_argument("solve_nonneg_linear: ragged matrix");
            for (const Int& e : row)
                if (e < 0) throw std::invalid_argument("solve_nonneg_linear: negative matrix entry");
        }
        for (const Int& e : b)
            if (e < 0) throw std::invalid_argument("solve_nonneg_linear: negative target entry");
        for (size_t c = 0; c < cols; ++c) {
            bool positive = false;
            for (size_t i = 0; i < rows; ++i) positive = positive || A[i][c] > 0;
            if (!positive) throw std::invalid_argument("solve_nonneg_linear: all-zero column");
        }
        residual = b;
        assigned.assign(cols, 0);
        x.assign(cols, 0);
    }

    void set(size_t col, const Int& v) {
        x[col] = v;
        assigned[col] = 1;
        for (size_t i = 0; i < rows; ++i) residual[i] -= A[i][col] * v;
    }

    void unset(size_t col) {
        for (size_t i = 0; i < rows; ++i) residual[i] += A[i][col] * x[col];
        assigned[col] = 0;
        x[col] = 0;
    }

    // Descending-value DFS on the unassigned columns, in index order. A row
    // whose residual only one unassigned column can still serve pins that
    // column's value, so uniquely determined variables never get enumerated;
    // this leaves the solution set and the descending emission order intact.
    // emit returns false to stop after the first hit.
    bool search(const std::function<bool(const std::vector<Int>&)>& emit) {
        if (nodes_left == 0) throw budget_exhausted();
        --nodes_left;

        std::vector<size_t> pinned_here;
        bool dead = false;
        bool changed = true;
        while (changed && !dead) {
            changed = false;
            for (size_t i = 0; i < rows && !dead; ++i) {
                size_t live = 0, col = 0;
                for (size_t c = 0; c < cols; ++c) {
                    if (!assigned[c] && A[i][c] > 0) {
                        ++live;
                        col = c;
                    }
                }
                if (live == 0) {
                    dead = residual[i] != 0;
                } else if (live == 1) {
                    Int v = residual[i] / A[i][col];
                    if (v < 0 || v * A[i][col] != residual[i]) {
                        dead = true;
                        break;
                    }
                    set(col, v);
                    pinned_here.push_back(col);
                    for (size_t r = 0; r < rows; ++r) dead = dead || residual[r] < 0;
                    changed = true;
                }
            }
        }

        bool keep_going = true;
        if (!dead) {
            size_t branch = cols;
            for (size_t c = 0; c < cols && branch == cols; ++c)
                if (!assigned[c]) branch = c;
            if (branch == cols) {
                keep_going = emit(x);
            } else {
                bool first = true;
                Int bound = 0;
                for (size_t i = 0; i < rows; ++i) {
                    if (A[i][branch] == 0) continue;
                    Int cap = residual[i] / A[i][branch];
                    if (first || cap < bound) bound = cap;
                    first = false;
                }
                for (Int v = bound; keep_going && v >= 0; --v) {
                    set(branch, v);
                    keep_going = search(emit);
                    unset(branch);
                }
            }
        }
        for (size_t i = pinned_here.size(); i-- > 0;) unset(pinned_here[i]);
        return keep_going;
    }
};

}  // namespace

Spectrum small_spectrum(const Graph& pattern, const std::function<bool(const Graph&)>& host_filter) {
    if (pattern.order() > 6) throw std::invalid_argument("small_spectrum: pattern larger than 6 vertices");
    std::map<Int, Graph> by_value;  // value -> smallest host realizing it
    enumerate_nonisomorphic(pattern.order(), false, [&](const Graph& host) {
        if (host_filter && !host_filter(host)) return true;
        auto [it, fresh] = by_value.emplace(hom_count(pattern, host), host);
        if (!fresh && host.order() < it->second.order()) it->second = host;
        return true;
    });
    Spectrum s;
    s.pattern = pattern;
    for (const auto& [value, host] : by_value) {
        s.values.push_back(value);
        s.witnesses.push_back(host);
    }
    return s;
}

SemigroupData bezout_threshold(const std::vector<Int>& generators) {
    if (generators.empty()) throw std::invalid_argument("bezout_threshold: no generators");
    for (const Int& g : generators)
        if (g <= 0) throw std::invalid_argument("bezout_threshold: generators must be positive");

    SemigroupData data;
    data.generators = generators;

    // Left-fold extended gcd: coefficients for the running gcd get rescaled as
    // each further generator is folded in.
    data.gcd = generators[0];
    data.bezout = {1};
    for (size_t i = 1; i < generators.size(); ++i) {
        Int g, u, v;
        ext_gcd(data.gcd, generators[i], g, u, v);
        for (Int& coeff : data.bezout) coeff *= u;
        data.bezout.push_back(v);
        data.gcd = g;
    }

    Int min_coeff = *std::min_element(data.bezout.begin(), data.bezout.end());
    if (min_coeff >= 0) {
        data.threshold = 0;
        return data;
    }
    Int sum = 0;
    for (const Int& g : generators) sum += g;
    data.threshold = -min_coeff * generators[0] * sum;

    if (data.threshold > kMaxGapTable)
        throw std::runtime_error("bezout_threshold: threshold too large to tabulate gaps: " +
                                 data.threshold.str());
    auto limit = data.threshold.convert_to<unsigned long long>();
    data.step_table.assign(limit, -1);
    for (unsigned long long v = 1; v < limit; ++v) {
        for (size_t j = 0; j < generators.size(); ++j) {
            if (generators[j] > v) continue;
            auto prev = v - generators[j].convert_to<unsigned long long>();
            if (prev == 0 || data.step_table[prev] >= 0) {
                data.step_table[v] = static_cast<int>(j);
                break;
            }
        }
        if (data.step_table[v] < 0 && Int(v) % data.gcd == 0) data.gaps.push_back(v);
    }
    return data;
}

bool semigroup_member(const SemigroupData& data, const Int& h) {
    if (h < 0) return false;
    if (h == 0) return true;
    if (h % data.gcd != 0) return false;
    if (h >= data.threshold) return true;
    return data.step_table[h.convert_to<unsigned long long>()] >= 0;
}

std::optional<std::vector<Int>> semigroup_combination(const SemigroupData& data, const Int& h) {
    if (!semigroup_member(data, h)) return std::nullopt;
    std::vector<Int> coeff(data.generators.size(), 0);
    if (h == 0) return coeff;
    if (h < data.threshold) {
        // Walk the tabulated reachability steps.
        auto v = h.convert_to<unsigned long long>();
        while (v > 0) {
            int j = data.step_table[v];
            coeff[j] += 1;
            v -= data.generators[j].convert_to<unsigned long long>();
        }
        return coeff;
    }
    Int q = h / data.gcd;
    if (data.threshold == 0) {
        // gcd itself is a nonnegative combination; scale it.
        for (size_t i = 0; i < coeff.size(); ++i) coeff[i] = q * data.bezout[i];
        return coeff;
    }
    // h = threshold + a*g0 + b*gcd with 0 <= b < g0/gcd; distribute threshold's
    // own combination c*g0*(sum of generators) across the coefficients.
    Int c = -*std::min_element(data.bezout.begin(), data.bezout.end());
    Int steps = (h - data.threshold) / data.gcd;
    Int per_step = data.generators[0] / data.gcd;
    Int b = steps % per_step;
    Int a = (steps - b) / per_step;
    Int base = c * data.generators[0];
    coeff[0] = base + a + b * data.bezout[0];
    for (size_t i = 1; i < coeff.size(); ++i) coeff[i] = base + b * data.bezout[i];
    return coeff;
}

FptVerdict single_hom_decide(const Graph& pattern, const Int& h, int search_cap) {
    if (pattern.order() == 0 || pattern.order() > 6)
        throw std::invalid_argument("single_hom_decide: pattern must have 1..6 vertices");
    if (!is_connected(pattern)) throw std::invalid_argument("single_hom_decide: pattern must be connected");
    if (h < 0) throw std::invalid_argument("single_hom_decide: negative target");
    if (search_cap < 0) throw std::invalid_argument("single_hom_decide: negative search cap");

    Spectrum spectrum = small_spectrum(pattern);
    std::vector<Int> generators;
    std::vector<Graph> witnesses;
    for (size_t i = 0; i < spectrum.values.size(); ++i) {
        if (spectrum.values[i] > 0) {
            generators.push_back(spectrum.values[i]);
            witnesses.push_back(spectrum.witnesses[i]);
        }
    }
    SemigroupData data = bezout_threshold(generators);

    if (h % data.gcd != 0)
        return no_with("target is not a multiple of the spectrum gcd " + data.gcd.str());
    if (h >= data.threshold || semigroup_member(data, h)) {
        auto coeff = semigroup_combination(data, h);
        return yes_with(combination_recipe(witnesses, *coeff),
                        h >= data.threshold ? "at or above the semigroup threshold"
                                            : "nonnegative combination of spectrum values");
    }

    // Below the threshold and outside the semigroup: any realizing host shrinks
    // to one with at most h * |V(pattern)| vertices, so scan hosts up to there
    // (or up to the cap, whichever is smaller).
    Int full_bound = h * pattern.order();
    int enumerable = std::min(search_cap, 9);
    int bound = full_bound < enumerable ? full_bound.convert_to<int>() : enumerable;
    std::optional<Graph> found;
    enumerate_nonisomorphic(bound, false, [&](const Graph& host) {
        if (hom_count(pattern, host) == h) {
            found = host;
            return false;
        }
        return true;
    });
    if (found) return yes_with(Recipe{{*found, 1}}, "exhaustive search hit");
    if (full_bound <= bound) return no_with("exhaustive search over all hosts within the shrink bound");
    return unknown_with("search capped at " + std::to_string(bound) + " host vertices; shrink bound is " +
                        full_bound.str());
}

FptVerdict equisize_sub_decide(const std::vector<std::pair<Graph, Int>>& constraints,
                               uint64_t node_budget) {
    if (constraints.empty()) throw std::invalid_argument("equisize_sub_decide: no constraints");
    int k = constraints[0].first.order();
    if (k < 1 || k > 6) throw std::invalid_argument("equisize_sub_decide: pattern order must be 1..6");
    for (const auto& [pattern, count] : constraints) {
        if (pattern.order() != k)
            throw std::invalid_argument("equisize_sub_decide: patterns must share one order");
        if (!is_connected(pattern))
            throw std::invalid_argument("equisize_sub_decide: patterns must be connected");
        if (count < 0) throw std::invalid_argument("equisize_sub_decide: negative target");
    }

    // Column per isomorphism type on exactly k vertices, in canonical-code order.
    std::vector<Graph> types = enumerate_nonisomorphic(k, true);
    std::sort(types.begin(), types.end(), [](const Graph& a, const Graph& b) {
        return canonical_code(a) < canonical_code(b);
    });

    std::vector<Graph> kept;
    std::vector<std::vector<Int>> A(constraints.size());
    for (const Graph& type : types) {
        std::vector<Int> column;
        bool positive = false;
        for (const auto& [pattern, count] : constraints) {
            column.push_back(sub_count(pattern, type));
            positive = positive || column.back() > 0;
        }
        if (!positive) continue;  // contributes to no constraint; stays free
        kept.push_back(type);
        for (size_t i = 0; i < column.size(); ++i) A[i].push_back(column[i]);
    }

    std::vector<Int> b;
    for (const auto& [pattern, count] : constraints) b.push_back(count);

    if (kept.empty()) {
        bool all_zero = std::all_of(b.begin(), b.end(), [](const Int& v) { return v == 0; });
        return all_zero ? yes_with(Recipe{}, "all targets zero")
                        : no_with("no host type realizes any pattern");
    }

    std::optional<std::vector<Int>> x;
    try {
        x = solve_nonneg_linear(A, b, node_budget);
    } catch (const budget_exhausted&) {
        return unknown_with("linear solver budget exhausted");
    }
    if (!x) return no_with("nonnegative linear system has no solution");
    Recipe recipe;
    for (size_t j = 0; j < kept.size(); ++j) {
        if ((*x)[j] > 0) recipe.push_back({kept[j], (*x)[j]});
    }
    return yes_with(std::move(recipe), "nonnegative linear system solved");
}

std::optional<std::vector<Int>> solve_nonneg_linear(const std::vector<std::vector<Int>>& A,
                                                    const std::vector<Int>& b, uint64_t node_budget) {
    LinearSystem system(A, b, node_budget);
    std::optional<std::vector<Int>> solution;
    system.search([&](const std::vector<Int>& sol) {
        solution = sol;
        return false;
    });
    return solution;
}

std::vector<std::vector<Int>> solve_nonneg_linear_all(const std::vector<std::vector<Int>>& A,
                                                      const std::vector<Int>& b, uint64_t node_budget) {
    LinearSystem system(A, b, node_budget);
    std::vector<std::vector<Int>> solutions;
    system.search([&](const std::vector<Int>& sol) {
        solutions.push_back(sol);
        return true;
    });
    return solutions;
}

}  // namespace homrec
