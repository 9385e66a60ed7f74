#pragma once

#include "homrec/bigint.hpp"
#include "homrec/graph.hpp"
#include "homrec/instance.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homrec {

// Every value hom(pattern, G) takes over hosts with at most |V(pattern)|
// vertices, the 0-vertex host included; witnesses[i] is one host realizing
// values[i]. The optional filter restricts the host class (default: all).
struct Spectrum {
    Graph pattern;
    std::vector<Int> values;  // sorted, distinct
    std::vector<Graph> witnesses;
};

Spectrum small_spectrum(const Graph& pattern,
                        const std::function<bool(const Graph&)>& host_filter = {});

// Eventual structure of the set of nonnegative combinations of the
// generators: at threshold and above, membership is exactly divisibility by
// the gcd; below it, the gcd multiples that are not members are listed in
// gaps (tabulated exactly).
struct SemigroupData {
    std::vector<Int> generators;  // positive, in the order supplied
    Int gcd = 0;
    Int threshold = 0;
    std::vector<Int> bezout;      // gcd == sum bezout[i] * generators[i]
    std::vector<Int> gaps;        // sorted; empty when threshold == 0
    std::vector<int> step_table;  // per value below threshold: a generator
                                  // index reaching it, or -1 (internal)
};

SemigroupData bezout_threshold(const std::vector<Int>& generators);

bool semigroup_member(const SemigroupData& data, const Int& h);

// Per-generator coefficients summing to h, or nullopt when h is not a member.
std::optional<std::vector<Int>> semigroup_combination(const SemigroupData& data, const Int& h);

// Outcome of the fixed-parameter deciders: on yes, the recipe is a
// disjoint-union certificate built from small hosts.
struct FptVerdict {
    Status status = Status::unknown;
    std::optional<Recipe> recipe;
    std::string reason;
};

// Decides whether some graph G satisfies hom(pattern, G) == h, for a
// connected pattern on 1..6 vertices. Pipeline: divisibility by the spectrum
// gcd, the eventual threshold, exact table lookup below it, and last an
// exhaustive scan of hosts with at most min(h * |V(pattern)|, search_cap)
// vertices; the scan returns unknown when the cap truncates it.
FptVerdict single_hom_decide(const Graph& pattern, const Int& h, int search_cap = 8);

// Decides whether some graph G satisfies sub(F_i, G) == h_i for all i, where
// the F_i are connected and share one order k <= 6. Reduces to a nonnegative
// integer linear system over the isomorphism types on exactly k vertices;
// returns unknown if the solver budget runs out.
FptVerdict equisize_sub_decide(const std::vector<std::pair<Graph, Int>>& constraints,
                               uint64_t node_budget = 10'000'000);

// First nonnegative integer solution of A x = b (descending-value depth-first
// order), or nullopt. Requires all entries nonnegative and every column
// positive somewhere; throws budget_exhausted past node_budget search nodes.
// Distinct solutions are pairwise incomparable under componentwise <=, so the
// _all variant enumerates exactly the minimal solutions.
std::optional<std::vector<Int>> solve_nonneg_linear(const std::vector<std::vector<Int>>& A,
                                                    const std::vector<Int>& b,
                                                    uint64_t node_budget = 10'000'000);
std::vector<std::vector<Int>> solve_nonneg_linear_all(const std::vector<std::vector<Int>>& A,
                                                      const std::vector<Int>& b,
                                                      uint64_t node_budget = 10'000'000);

}  // namespace homrec
