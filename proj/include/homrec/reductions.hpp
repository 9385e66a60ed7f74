#pragma once

#include "homrec/bigint.hpp"
#include "homrec/graph.hpp"
#include "homrec/instance.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homrec {

// ---- set splitting -----------------------------------------------------
//
// Ground set {1..ground_size}; asked whether some 2-partition (S1, S2) of it
// splits every listed subset, i.e. no subset lies wholly inside one side.
// Generated instances use the colour layout
//   element i -> colour i-1,  B = k,  E = k+1,  P = k+2.

struct SetSplittingInput {
    int ground_size = 0;
    std::vector<std::set<int>> collection;  // nonempty subsets of {1..ground_size}
};

// Three hom constraints over the colours above: an everything-star plus
// per-element and per-subset stars pinned to 1, the B-P edge pinned to 2 and
// the E-B-P star pinned to 0, with host order capped at 2k+6. Satisfiable
// exactly when the input splits.
Instance gen_setsplitting(const SetSplittingInput& input);

// The canonical two-sided host: an everything-star plus one star per side
// holding P and that side's elements (order exactly 2k+6). Satisfies the
// generated instance iff (s1, s2) splits every subset in the collection.
ColouredGraph setsplitting_witness(const std::set<int>& s1, const std::set<int>& s2,
                                   const SetSplittingInput& input);

// Reads a splitting partition back out of any host satisfying the generated
// instance: the two B-P edges mark the side stars, and an element belongs to
// the side whose star it hangs from. Rejects hosts failing the constraints.
std::pair<std::set<int>, std::set<int>> setsplitting_extract(const ColouredGraph& host,
                                                             const SetSplittingInput& input);

// ---- quadratic polynomial solvability ------------------------------------
//
// Asks whether a*x^2 + b*y = c has a solution over the naturals. Generated
// instances use the colour layout
//   R = 0, A = 1, X = 2, B = 3, Y = 4, M1 = 5, M2 = 6.

struct QPolyInput {
    Int a, b, c;
};

// Nine hom constraints over fixed star patterns (independent of the input);
// only the target counts a+1, b+1, c, 2, 1, 1, 0, 1, 1 carry the numbers.
// No size bound is attached.
Instance gen_qpoly(const QPolyInput& input);

// Two R-rooted stars: one holding M1, a A-leaves, x X-leaves and one B/Y leaf
// each; the other holding M2, b B-leaves, y Y-leaves and one A/X leaf each.
// The five-leaf probe star then counts a*x^2 + b*y homomorphisms. Refuses
// negative entries and graphs beyond max_order vertices.
ColouredGraph qpoly_witness(const Int& a, const Int& b, const Int& x, const Int& y,
                            int max_order = 20000);

// Quadratic solvability with x restricted to odd numbers transforms into the
// binomial-style equation a'*X*(X-1) + b'*Y = c'.
struct BPolyInput {
    Int a, b, c;
};

// (a, b, c) -> (4a, b, c-a); requires c >= a. Odd-x solutions of
// a*x^2 + b*y = c correspond to solutions of 4a*X*(X-1) + b*Y = c-a via
// x = 2X - 1.
BPolyInput qpoly_to_bpoly(const QPolyInput& input);

// ---- exact-count 3-colouring ----------------------------------------------
//
// Asks whether the 3-colourings of `graph` extending any fixed assignment on
// the special vertices number exactly k. Special vertex i (0-based position in
// `special`) carries label i in the generated labelled instance.

struct EC3ColInput {
    Graph graph;
    std::vector<int> special;  // distinct vertices of graph
    Int k;
};

// Labelled constraints: the input graph with labels on the special vertices
// pinned to k, a single vertex pinned to 3, an edge pinned to 6, and each
// label alone on a vertex pinned to 1; host order capped at 3. The count
// constraints admit exactly the triangle as host, so a witness is a labelled
// placement of the special vertices on it.
Instance gen_ec3col(const EC3ColInput& input);

// Host triangle with the labels of parts[j] placed on vertex j. parts must
// partition {0..special.size()-1} into at most 3 (possibly empty) sets.
LabelledGraph ec3col_witness(const EC3ColInput& input,
                             const std::vector<std::set<int>>& parts);

// ---- Kneser gadget families -------------------------------------------------
//
// Encoders for turning decorated instances into plain ones hang copies of
// pairwise homomorphically incomparable Kneser graphs off long paths. A family
// binds role names to Kneser graphs with a designated attachment tip.

struct KneserSpec {
    int r = 0, s = 0;  // K(r, s): r-subsets of {0..s-1}, disjointness adjacency
};

// chi(K(r,s)) = s - 2r + 2; odd girth 3 when s >= 3r, else 2*ceil(r/(s-2r))+1.
int kneser_chromatic(const KneserSpec& spec);
int kneser_odd_girth(const KneserSpec& spec);

// Validates that chromatic number and odd girth certify pairwise
// incomparability: a homomorphism cannot lower the chromatic number or raise
// the odd girth, so once the specs are sorted by chromatic number, pairwise
// distinct chromatic numbers plus strictly increasing odd girth refute a
// homomorphism in each direction for every pair. Throws when the certificate
// fails; spec validity (1 <= r, 2r < s) is checked first.
void certify_incomparable(const std::vector<KneserSpec>& specs);

// The order-smallest chain of `count` specs inside the parametric family
// K(k(n-2), (2k+1)(n-2)) that certify_incomparable accepts: n and k both have
// to climb, giving K(1,3), K(4,10), K(9,21), K(16,36), ... along the diagonal.
std::vector<KneserSpec> suggest_parametric_roles(int count);

struct GadgetRole {
    std::string name;
    KneserSpec spec;
    Graph graph;
    int tip = 0;            // attachment vertex: the lexicographically first subset
    long long tip_aut = 0;  // automorphisms fixing the tip
    int chromatic = 0;
    int odd_girth = 0;
};

struct GadgetFamilySpec {
    std::vector<std::pair<std::string, KneserSpec>> roles;
    // Incomparability certification is what the encoders' counting guarantees
    // rest on; families that skip it (e.g. every role sharing one small graph)
    // are still buildable for structural experiments.
    bool require_certificate = true;
    int max_order = 4096;  // largest member the family will materialize
    uint64_t aut_budget = 8'000'000'000ULL;
};

struct GadgetFamily {
    std::vector<GadgetRole> members;
    int max_member_order = 0;  // the path-length unit used by every gadget

    const GadgetRole& role(const std::string& name) const;
    bool has_role(const std::string& name) const;
};

// Materializes and validates a family: distinct role names, legal and
// materializable specs, connectivity, certificate (unless waived), tip
// automorphism counts by pinned backtracking.
GadgetFamily build_gadget_family(const GadgetFamilySpec& spec);

// ---- homomorphic images ---------------------------------------------------

// All isomorphism types reachable from g by repeatedly identifying two
// non-adjacent vertices — the images of g under non-injective homomorphisms.
// Returns nullopt once more than `cap` distinct types appear.
std::optional<std::vector<Graph>> noninjective_images(const Graph& g, std::size_t cap = 64);

// The "no stray gadget image" side constraints an encoded instance carries:
// hom(image) = 0 for every proper homomorphic image of every family member.
// Members whose image enumeration overruns the cap are listed by name instead,
// leaving the constraint set symbolic and the instance non-executable.
struct ImageConstraints {
    bool executable = false;
    std::vector<Graph> images;         // pairwise non-isomorphic
    std::vector<std::string> pending;  // roles whose images were not enumerated
};

ImageConstraints family_image_constraints(const GadgetFamily& family, std::size_t cap = 64);

// ---- gadget encoders --------------------------------------------------------

struct DirectedGraph {
    int order = 0;
    std::vector<std::pair<int, int>> arcs;  // (tail, head), no loops or repeats
};

// Undirected encoding of a digraph: every vertex gets an indicator gadget
// (tips of roles I0 and I1 hung on 2l-paths), every arc a direction gadget
// (a 10l-2l-2l-2l-10l path chain from tail to head with D0 and D1 tips hung
// at the two junctions). Returns the encoded graph and the hom-count
// multiplier (a_D0 a_D1)^arcs * (a_I0 a_I1)^order.
std::pair<Graph, Int> encode_directed(const DirectedGraph& f, const GadgetFamily& family);

// Undirected encoding of a labelled graph: indicator gadgets on all vertices,
// a bidirectional gadget (two opposing direction gadgets) per edge, and per
// label a chain hung on the labelled vertex spelling the label id in binary
// between roles A and Z (tips joined by 2l-paths, most significant bit first,
// all chains the width of the largest id). `count` scales to
// count * a_I^order * a_BD^edges * prod over labels a_chain.
std::pair<Graph, Int> encode_labelled(const LabelledGraph& h, const GadgetFamily& family,
                                      const Int& count);

}  // namespace homrec
