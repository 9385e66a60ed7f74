#include "CLI11.hpp"

#include "homrec/construct.hpp"
#include "homrec/counting.hpp"
#include "homrec/decide.hpp"
#include "homrec/fpt.hpp"
#include "homrec/graph.hpp"
#include "homrec/instance.hpp"
#include "homrec/reductions.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace homrec;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::stringstream in(text);
    while (std::getline(in, part, sep))
        if (!part.empty()) out.push_back(part);
    return out;
}

// yes/no/unknown to stdout plus the witness when there is one; the exit code
// mirrors the verdict (0 yes, 1 no, 2 unknown).
int emit_verdict(const Verdict& v, const Instance* inst, bool verify) {
    switch (v.status) {
        case Status::yes: {
            if (verify && inst && (!v.witness || !satisfies(*inst, *v.witness)))
                throw std::runtime_error("witness failed re-verification");
            std::cout << "yes\n";
            if (v.witness) {
                std::cout << "witness " << emit_graph6(v.witness->graph) << "\n";
                if (!v.witness->colours.empty()) {
                    std::cout << "colours ";
                    for (std::size_t i = 0; i < v.witness->colours.size(); ++i)
                        std::cout << (i ? "," : "") << v.witness->colours[i];
                    std::cout << "\n";
                }
                if (!v.witness->labels.empty()) {
                    std::cout << "labels ";
                    bool first = true;
                    for (const auto& [label, vertex] : v.witness->labels) {
                        std::cout << (first ? "" : ",") << label << "=" << vertex;
                        first = false;
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        }
        case Status::no:
            std::cout << "no\n";
            return 1;
        case Status::unknown:
        default:
            std::cout << "unknown " << v.reason << "\n";
            if (v.bound) std::cout << "bound " << to_string(*v.bound) << "\n";
            return 2;
    }
}

int run_count(const std::string& pattern, const std::string& host, const std::string& kind) {
    Graph f = parse_graph6(pattern);
    Graph g = parse_graph6(host);
    Int value;
    if (kind == "hom")
        value = hom_count(f, g);
    else if (kind == "sub")
        value = sub_count(f, g);
    else if (kind == "indsub")
        value = indsub_count(f, g);
    else if (kind == "surj")
        value = surj_count(f, g);
    else
        throw std::runtime_error("unknown count kind \"" + kind + "\"");
    std::cout << to_string(value) << "\n";
    return 0;
}

int run_decide(const std::string& path, std::optional<int> bound, std::optional<uint64_t> cap,
               bool verify) {
    Instance inst = instance_from_json(read_file(path));
    if (bound) inst.size_bound = *bound;
    SearchCaps caps;
    if (const char* env = std::getenv("HOMREC_CAP"); env && !cap)
        caps.attempts = std::strtoull(env, nullptr, 10);
    if (cap) caps.attempts = *cap;
    Verdict v = inst.size_bound ? decide_bounded(inst, caps) : decide_unbounded(inst, caps);
    return emit_verdict(v, &inst, verify);
}

int run_construct_clique(long long n, int k, const std::string& h, bool verify) {
    Int target = parse_int(h);
    CliqueConstruction built = construct_clique_graph_report(n, k, target);
    std::cout << emit_graph6(built.graph) << "\n";
    if (verify) {
        Graph kk(k);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) kk.add_edge(u, v);
        Int have = sub_count(kk, built.graph);
        if (have != target) throw std::runtime_error("construction failed verification");
        std::cout << "verified sub(K" << k << ") = " << to_string(have) << " on "
                  << built.graph.order() << " vertices\n";
    }
    return 0;
}

int run_construct_triangle(long long n, const std::string& h, bool verify) {
    Int target = parse_int(h);
    Graph g = construct_triangle_graph(n, target);
    std::cout << emit_graph6(g) << "\n";
    if (verify) {
        Graph k3(3);
        k3.add_edge(0, 1);
        k3.add_edge(0, 2);
        k3.add_edge(1, 2);
        Int have = sub_count(k3, g);
        if (have != target) throw std::runtime_error("construction failed verification");
        std::cout << "verified sub(K3) = " << to_string(have) << " on " << g.order()
                  << " vertices\n";
    }
    return 0;
}

int run_fpt_single(const std::string& pattern, const std::string& h, int cap, bool verify) {
    Graph f = parse_graph6(pattern);
    Int target = parse_int(h);
    FptVerdict fv = single_hom_decide(f, target, cap);
    Verdict v;
    v.status = fv.status;
    v.reason = fv.reason;
    int rc = emit_verdict(v, nullptr, false);
    if (fv.status == Status::yes && fv.recipe) {
        if (verify) {
            Graph host = realize_recipe(*fv.recipe);
            if (hom_count(f, host) != target)
                throw std::runtime_error("recipe failed re-verification");
        }
        std::cout << recipe_to_json(*fv.recipe) << "\n";
    }
    return rc;
}

int run_fpt_equisub(const std::string& path, bool verify) {
    Instance inst = instance_from_json(read_file(path));
    if (inst.kind != CountKind::sub || inst.graph_kind != GraphKind::plain)
        throw std::runtime_error("equisub expects a plain sub-count instance");
    std::vector<std::pair<Graph, Int>> constraints;
    for (const Constraint& c : inst.constraints)
        constraints.push_back({std::get<Graph>(c.pattern), c.count});
    FptVerdict fv = equisize_sub_decide(constraints);
    Verdict v;
    v.status = fv.status;
    v.reason = fv.reason;
    int rc = emit_verdict(v, nullptr, false);
    if (fv.status == Status::yes && fv.recipe) {
        if (verify) {
            Graph host = realize_recipe(*fv.recipe);
            for (const auto& [f, target] : constraints)
                if (sub_count(f, host) != target)
                    throw std::runtime_error("recipe failed re-verification");
        }
        std::cout << recipe_to_json(*fv.recipe) << "\n";
    }
    return rc;
}

int run_region(int n, const std::string& patterns, const std::string& kind,
               const std::string& out, int threads) {
    std::vector<Graph> fs;
    for (const std::string& g6 : split(patterns, ',')) fs.push_back(parse_graph6(g6));
    if (fs.empty()) throw std::runtime_error("no patterns given");
    auto rows = region_map(n, fs, count_kind_from_string(kind), threads);
    std::string csv = region_csv(fs.size(), rows);
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream file(out);
        if (!file) throw std::runtime_error("cannot write " + out);
        file << csv;
    }
    return 0;
}

std::set<int> parse_int_set(const std::string& text) {
    std::set<int> out;
    for (const std::string& part : split(text, ',')) out.insert(std::stoi(part));
    return out;
}

int run_gen_setsplitting(int ground, const std::string& sets) {
    SetSplittingInput input{ground, {}};
    for (const std::string& subset : split(sets, ';'))
        input.collection.push_back(parse_int_set(subset));
    std::cout << to_json(gen_setsplitting(input)) << "\n";
    return 0;
}

int run_gen_qpoly(const std::string& a, const std::string& b, const std::string& c) {
    std::cout << to_json(gen_qpoly({parse_int(a), parse_int(b), parse_int(c)})) << "\n";
    return 0;
}

int run_gen_ec3col(const std::string& g6, const std::string& special, const std::string& k) {
    EC3ColInput input{parse_graph6(g6), {}, parse_int(k)};
    for (const std::string& part : split(special, ',')) input.special.push_back(std::stoi(part));
    std::cout << to_json(gen_ec3col(input)) << "\n";
    return 0;
}

int run_kamke(const std::string& n, int k) {
    Int target = parse_int(n);
    BinomialDecomposition d = kamke_decompose(target, k);
    if (decomposition_sum(d) != target) throw std::runtime_error("decomposition failed recount");
    nlohmann::json out;
    out["k"] = d.k;
    out["target"] = to_string(target);
    out["parts"] = d.parts;
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homomorphism/subgraph count reconstruction toolkit"};
    // long-form help only; "-h" stays free for the --h target-count options
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads,
                   "worker threads for enumerations; changes wall time, never output");

    int rc = 0;

    auto* count = app.add_subcommand("count", "count pattern occurrences in a host");
    std::string count_pattern, count_host, count_kind = "hom";
    count->add_option("--pattern", count_pattern, "pattern graph6")->required();
    count->add_option("--host", count_host, "host graph6")->required();
    count->add_option("--kind", count_kind, "hom|sub|indsub|surj")->capture_default_str();
    count->callback([&]() { rc = run_count(count_pattern, count_host, count_kind); });

    auto* decide = app.add_subcommand("decide", "decide whether some host meets every count");
    std::string decide_path;
    std::optional<int> decide_bound;
    std::optional<uint64_t> decide_cap;
    bool decide_verify = true;
    decide->add_option("--instance", decide_path, "instance JSON file")->required();
    decide->add_option("--bound", decide_bound, "host order bound (overrides the instance)");
    decide->add_option("--cap", decide_cap,
                       "search attempt budget (env HOMREC_CAP overrides the default)");
    decide->add_flag("--verify,!--no-verify", decide_verify, "re-count any witness (default on)");
    decide->callback(
        [&]() { rc = run_decide(decide_path, decide_bound, decide_cap, decide_verify); });

    auto* construct = app.add_subcommand("construct", "build graphs hitting a target count");
    construct->require_subcommand(1);
    auto* cl = construct->add_subcommand("clique", "graph with a given k-clique count");
    long long cl_n = 0;
    int cl_k = 0;
    std::string cl_h;
    bool cl_verify = true;
    cl->add_option("--n", cl_n, "count budget parameter n (order stays near n)")->required();
    cl->add_option("--k", cl_k, "clique order k >= 2")->required();
    cl->add_option("--h", cl_h, "target count, 0 <= h <= C(n, k)")->required();
    cl->add_flag("--verify,!--no-verify", cl_verify, "re-count the result (default on)");
    cl->callback([&]() { rc = run_construct_clique(cl_n, cl_k, cl_h, cl_verify); });
    auto* tr = construct->add_subcommand("triangle", "graph on n+1 vertices with h triangles");
    long long tr_n = 0;
    std::string tr_h;
    bool tr_verify = true;
    tr->add_option("--n", tr_n, "parameter n >= 130")->required();
    tr->add_option("--h", tr_h, "target triangle count, 0 <= h <= C(n, 3)")->required();
    tr->add_flag("--verify,!--no-verify", tr_verify, "re-count the result (default on)");
    tr->callback([&]() { rc = run_construct_triangle(tr_n, tr_h, tr_verify); });

    auto* fpt = app.add_subcommand("fpt", "fixed-parameter deciders with recipes");
    fpt->require_subcommand(1);
    auto* single = fpt->add_subcommand("single", "is hom(pattern, G) = h solvable?");
    std::string single_pattern, single_h;
    int single_cap = 8;
    bool single_verify = true;
    single->add_option("--pattern", single_pattern, "connected pattern graph6")->required();
    single->add_option("--h", single_h, "target count")->required();
    single->add_option("--cap", single_cap, "host order scanned exhaustively at most")
        ->capture_default_str();
    single->add_flag("--verify,!--no-verify", single_verify, "re-count any recipe (default on)");
    single->callback([&]() { rc = run_fpt_single(single_pattern, single_h, single_cap,
                                                 single_verify); });
    auto* equisub = fpt->add_subcommand("equisub", "equal-order sub-count system");
    std::string equisub_path;
    bool equisub_verify = true;
    equisub->add_option("--instance", equisub_path, "plain sub instance JSON file")->required();
    equisub->add_flag("--verify,!--no-verify", equisub_verify,
                      "re-count any recipe (default on)");
    equisub->callback([&]() { rc = run_fpt_equisub(equisub_path, equisub_verify); });

    auto* region = app.add_subcommand("region", "realizable count vectors on n vertices");
    int region_n = 0;
    std::string region_patterns, region_kind = "sub", region_out;
    region->add_option("--n", region_n, "host order")->required();
    region->add_option("--patterns", region_patterns, "comma-separated pattern graph6 list")
        ->required();
    region->add_option("--kind", region_kind, "hom|sub")->capture_default_str();
    region->add_option("--out", region_out, "CSV output path (default: stdout)");
    region->callback([&]() {
        rc = run_region(region_n, region_patterns, region_kind, region_out, threads);
    });

    auto* gen = app.add_subcommand("gen", "emit reduction instances as JSON");
    gen->require_subcommand(1);
    auto* ss = gen->add_subcommand("setsplitting", "set splitting reduction");
    int ss_ground = 0;
    std::string ss_sets;
    ss->add_option("--ground", ss_ground, "ground set size k (elements 1..k)")->required();
    ss->add_option("--sets", ss_sets, "subsets, e.g. \"1,2;2,3\"")->required();
    ss->callback([&]() { rc = run_gen_setsplitting(ss_ground, ss_sets); });
    auto* qp = gen->add_subcommand("qpoly", "a x^2 + b y = c solvability reduction");
    std::string qp_a, qp_b, qp_c;
    qp->add_option("--a", qp_a)->required();
    qp->add_option("--b", qp_b)->required();
    qp->add_option("--c", qp_c)->required();
    qp->callback([&]() { rc = run_gen_qpoly(qp_a, qp_b, qp_c); });
    auto* ec = gen->add_subcommand("ec3col", "exact-count 3-colouring reduction");
    std::string ec_graph, ec_special, ec_k;
    ec->add_option("--graph", ec_graph, "graph6 of the graph to colour")->required();
    ec->add_option("--special", ec_special, "comma-separated identified vertices");
    ec->add_option("--k", ec_k, "required number of colourings")->required();
    ec->callback([&]() { rc = run_gen_ec3col(ec_graph, ec_special, ec_k); });

    auto* kamke = app.add_subcommand("kamke", "write n as a short sum of C(a_i, k)");
    std::string kamke_n;
    int kamke_k = 2;
    kamke->add_option("--n", kamke_n, "target value")->required();
    kamke->add_option("--k", kamke_k, "binomial lower index")->capture_default_str();
    kamke->callback([&]() { rc = run_kamke(kamke_n, kamke_k); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // help prints with code 0; parse errors exit >= 100
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
