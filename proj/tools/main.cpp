// Command-line front end: generate instances, run the solvers, evaluate and
// inspect strategies, and produce ratio-comparison reports.
//
// Exit codes: 0 success, 2 invalid input, 3 size limit, 4 guarantee
// violation in `compare`, 1 internal error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsp/cut.hpp"
#include "gsp/decision_tree.hpp"
#include "gsp/instance.hpp"
#include "gsp/oracle.hpp"
#include "gsp/rational.hpp"
#include "gsp/separator.hpp"
#include "gsp/strategy.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitBoundViolated = 4;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw gsp::Error("cannot open output file: " + out_path);
    f << text;
}

json vertex_list(const gsp::VertexSet& s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

std::string dumped(const json& j) { return j.dump() + "\n"; }

gsp::CutSolver make_cut_solver(const std::string& name, uint64_t seed, int exact_limit) {
    gsp::CutSolver solver;
    solver.kind =
        name == "exact" ? gsp::CutSolver::Kind::exact : gsp::CutSolver::Kind::heuristic;
    solver.seed = seed;
    solver.exact_limit = exact_limit;
    return solver;
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
    int n = 8;
    long long max_cost = 10;
    long long max_weight = 10;
    uint64_t seed = 0;
    std::string p = "0.5";
    std::string in;  // reduction only
    long long budget = 0;
    std::string out;
};

int run_gen_tree(const GenArgs& a) {
    emit(a.out, gsp::save_instance(gsp::gen_random_tree(a.n, a.max_cost, a.max_weight, a.seed)));
    return kExitOk;
}

int run_gen_graph(const GenArgs& a) {
    emit(a.out, gsp::save_instance(gsp::gen_random_graph(a.n, gsp::parse_decimal(a.p),
                                                         a.max_cost, a.max_weight, a.seed)));
    return kExitOk;
}

int run_gen_reduction(const GenArgs& a) {
    gsp::SearchInstance t = gsp::load_instance_file(a.in);
    gsp::HardnessReduction r = gsp::hardness_reduction(t, a.budget);
    emit(a.out, gsp::save_instance(r.instance));
    if (!a.out.empty())
        std::cout << dumped(json{{"transformed_budget", r.transformed_budget}});
    return kExitOk;
}

// --- solve -------------------------------------------------------------

struct SolveArgs {
    std::string in;
    std::string algo = "tree";
    std::string epsilon = "0.5";
    std::string solver = "exact";
    uint64_t seed = 0;
    int exact_limit = 18;
    std::string out;
};

int run_solve(const SolveArgs& a) {
    gsp::SearchInstance g = gsp::load_instance_file(a.in);
    gsp::DecisionTree d;
    json stats;
    if (a.algo == "oracle") {
        gsp::OracleResult r = gsp::opt_decision_tree(g);
        d = std::move(r.tree);
        stats = {{"algorithm", "oracle"}, {"cost", r.cost}};
    } else {
        gsp::SolveStats s;
        if (a.algo == "tree") {
            d = gsp::solve_tree(g, gsp::parse_decimal(a.epsilon), &s);
            stats = {{"algorithm", "tree"}, {"epsilon", a.epsilon}};
        } else {
            d = gsp::solve_graph(g, make_cut_solver(a.solver, a.seed, a.exact_limit), &s);
            stats = {{"algorithm", "graph"}, {"solver", a.solver}};
        }
        stats["cost"] = gsp::cost_pathsum(g, d);
        stats["max_depth"] = s.max_depth;
        stats["covered_per_level"] = s.covered_per_level;
    }
    if (a.out.empty()) {
        std::cout << gsp::save_decision_tree(d);
        std::cerr << dumped(stats);
    } else {
        gsp::save_decision_tree_file(d, a.out);
        std::cout << dumped(stats);
    }
    return kExitOk;
}

// --- eval --------------------------------------------------------------

int run_eval(const std::string& in, const std::string& tree) {
    gsp::SearchInstance g = gsp::load_instance_file(in);
    gsp::DecisionTree d = gsp::load_decision_tree_file(tree);
    gsp::validate(g, d);  // throws InvalidTree -> exit 2
    long long by_path = gsp::cost_pathsum(g, d);
    long long by_contribution = gsp::cost_contribution(g, d);
    gsp::internal_check(by_path == by_contribution, "cost identities disagree");
    std::cout << dumped(json{{"cost_contribution", by_contribution},
                             {"cost_pathsum", by_path},
                             {"valid", true}});
    return kExitOk;
}

// --- separator ---------------------------------------------------------

struct SeparatorArgs {
    std::string in;
    long long k = -1;
    std::string alpha, delta;
    std::string out;
};

int run_separator(const SeparatorArgs& a) {
    const bool relaxed = !a.alpha.empty() || !a.delta.empty();
    if (a.k >= 0 && relaxed)
        throw gsp::InvalidParams("pass either --k or --alpha/--delta, not both");
    if (a.k < 0 && (a.alpha.empty() || a.delta.empty()))
        throw gsp::InvalidParams("pass --k, or both --alpha and --delta");
    gsp::SearchInstance t = gsp::load_instance_file(a.in);
    gsp::SeparatorResult r =
        relaxed ? gsp::separator_fptas(t, gsp::parse_decimal(a.alpha), gsp::parse_decimal(a.delta))
                : gsp::separator_exact(t, a.k);
    json comps = json::array();
    long long max_weight = 0;
    for (const auto& h : r.components) {
        comps.push_back(vertex_list(h.vertices));
        max_weight = std::max(max_weight, h.weight());
    }
    emit(a.out, dumped(json{{"components", comps},
                            {"cost", r.separator_cost},
                            {"max_component_weight", max_weight},
                            {"separator", vertex_list(r.separator)}}));
    return kExitOk;
}

// --- cut ---------------------------------------------------------------

struct CutArgs {
    std::string in;
    std::string solver = "exact";
    uint64_t seed = 0;
    int exact_limit = 18;
    std::string out;
};

int run_cut(const CutArgs& a) {
    gsp::SearchInstance g = gsp::load_instance_file(a.in);
    gsp::VertexCut cut = gsp::solve_cut(g, make_cut_solver(a.solver, a.seed, a.exact_limit));
    emit(a.out, dumped(json{{"a", vertex_list(cut.a)},
                            {"b", vertex_list(cut.b)},
                            {"cost", cut.cut_cost},
                            {"ratio", cut.ratio.str()},
                            {"s", vertex_list(cut.s)}}));
    return kExitOk;
}

// --- compare -----------------------------------------------------------

struct CompareArgs {
    std::string kind = "tree";
    std::vector<int> sizes;
    int seeds = 3;
    uint64_t seed_base = 0;
    std::vector<std::string> epsilons{"0.5"};
    std::vector<std::string> solvers{"exact"};
    long long max_cost = 10;
    long long max_weight = 10;
    std::string p = "0.5";
    int oracle_limit = 15;
    std::string format = "csv";
    bool timings = false;
    std::string out;
};

struct ReportRow {
    std::string instance;
    int n = 0;
    long long total_weight = 0;
    std::string algorithm;
    std::string param;
    long long cost = 0;
    std::optional<long long> opt;
    std::optional<std::string> ratio;
    std::optional<long long> runtime_ms;
    uint64_t seed = 0;
};

std::string render_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "instance,n,total_weight,algorithm,param,cost,opt,ratio,runtime_ms,seed\n";
    for (const auto& r : rows) {
        os << r.instance << ',' << r.n << ',' << r.total_weight << ',' << r.algorithm << ','
           << r.param << ',' << r.cost << ',';
        if (r.opt) os << *r.opt;
        os << ',';
        if (r.ratio) os << *r.ratio;
        os << ',';
        if (r.runtime_ms) os << *r.runtime_ms;
        os << ',' << r.seed << '\n';
    }
    return os.str();
}

std::string render_json(const std::vector<ReportRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json j{{"instance", r.instance},   {"n", r.n},
               {"total_weight", r.total_weight}, {"algorithm", r.algorithm},
               {"param", r.param},         {"cost", r.cost},
               {"seed", r.seed}};
        j["opt"] = r.opt ? json(*r.opt) : json(nullptr);
        j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
        j["runtime_ms"] = r.runtime_ms ? json(*r.runtime_ms) : json(nullptr);
        out.push_back(std::move(j));
    }
    return dumped(json{{"rows", out}});
}

// cost <= (4 + eps) * opt, exactly.
bool within_tree_bound(long long cost, const gsp::Rat& eps, long long opt) {
    return static_cast<gsp::int128>(cost) * eps.den <=
           static_cast<gsp::int128>(opt) * (4 * eps.den + eps.num);
}

// cost <= (12 + 4*sqrt(5)) * opt, exactly: surd part squared.
bool within_graph_bound(long long cost, long long opt) {
    if (cost <= 12 * opt) return true;
    const gsp::int128 gap = static_cast<gsp::int128>(cost) - 12 * opt;
    return gap * gap <= 80 * static_cast<gsp::int128>(opt) * opt;
}

int run_compare(const CompareArgs& a) {
    std::vector<ReportRow> rows;
    std::vector<std::string> violations;
    for (int n : a.sizes) {
        for (int i = 0; i < a.seeds; ++i) {
            const uint64_t seed = a.seed_base + static_cast<uint64_t>(i);
            gsp::SearchInstance g =
                a.kind == "tree"
                    ? gsp::gen_random_tree(n, a.max_cost, a.max_weight, seed)
                    : gsp::gen_random_graph(n, gsp::parse_decimal(a.p), a.max_cost,
                                            a.max_weight, seed);
            const std::string id =
                a.kind + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
            std::optional<long long> opt;
            if (n <= a.oracle_limit) opt = gsp::opt_decision_tree(g).cost;

            auto run_one = [&](const std::string& algorithm, const std::string& param,
                               auto&& solve_fn, auto&& bound_ok) {
                const auto t0 = std::chrono::steady_clock::now();
                gsp::DecisionTree d = solve_fn();
                const auto t1 = std::chrono::steady_clock::now();
                ReportRow row;
                row.instance = id;
                row.n = n;
                row.total_weight = g.total_weight();
                row.algorithm = algorithm;
                row.param = param;
                row.cost = gsp::cost_pathsum(g, d);
                row.seed = seed;
                if (a.timings)
                    row.runtime_ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                if (opt) {
                    row.opt = *opt;
                    row.ratio = gsp::Rat(row.cost, *opt).str();
                    if (!bound_ok(row.cost, *opt))
                        violations.push_back(id + " " + algorithm + " " + param + ": cost " +
                                             std::to_string(row.cost) + " exceeds the bound at opt " +
                                             std::to_string(*opt));
                }
                rows.push_back(std::move(row));
            };

            if (a.kind == "tree") {
                for (const std::string& es : a.epsilons) {
                    const gsp::Rat eps = gsp::parse_decimal(es);
                    run_one(
                        "tree", es, [&] { return gsp::solve_tree(g, eps); },
                        [&](long long cost, long long o) { return within_tree_bound(cost, eps, o); });
                }
            } else {
                for (const std::string& sv : a.solvers) {
                    run_one(
                        "graph", sv,
                        [&] { return gsp::solve_graph(g, make_cut_solver(sv, seed, 18)); },
                        [&](long long cost, long long o) {
                            // only the exact cut solver carries a guarantee
                            return sv != "exact" || within_graph_bound(cost, o);
                        });
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ReportRow& x, const ReportRow& y) {
        return std::tie(x.instance, x.algorithm, x.param) <
               std::tie(y.instance, y.algorithm, y.param);
    });
    emit(a.out, a.format == "json" ? render_json(rows) : render_csv(rows));
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "bound violated: " << v << "\n";
        return kExitBoundViolated;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search strategies for weighted graph search"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);
    CLI::App* gen_tree = gen->add_subcommand("tree", "random tree instance");
    CLI::App* gen_graph = gen->add_subcommand("graph", "random connected graph instance");
    CLI::App* gen_red = gen->add_subcommand("reduction", "edge-subdivision gadget of a tree");
    for (CLI::App* c : {gen_tree, gen_graph}) {
        c->add_option("--n", gen_args.n, "vertex count")->required()->check(CLI::Range(1, 1000000));
        c->add_option("--max-cost", gen_args.max_cost, "costs drawn from [1, max]")
            ->check(CLI::Range(1ll, 1000000000ll));
        c->add_option("--max-weight", gen_args.max_weight, "weights drawn from [1, max]")
            ->check(CLI::Range(1ll, 1000000000ll));
        c->add_option("--seed", gen_args.seed, "rng seed");
        c->add_option("--out", gen_args.out, "output file (default stdout)");
    }
    gen_graph->add_option("--p", gen_args.p, "edge probability, decimal");
    gen_red->add_option("--in", gen_args.in, "tree instance file")->required();
    gen_red->add_option("--budget", gen_args.budget, "search-cost budget to transform");
    gen_red->add_option("--out", gen_args.out, "output file (default stdout)");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "build a decision tree");
    solve->add_option("--in", solve_args.in, "instance file")->required();
    solve->add_option("--algo", solve_args.algo, "tree | graph | oracle")
        ->check(CLI::IsMember({"tree", "graph", "oracle"}));
    solve->add_option("--epsilon", solve_args.epsilon, "tree algo slack, decimal > 0");
    solve->add_option("--solver", solve_args.solver, "cut solver for --algo graph")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    solve->add_option("--seed", solve_args.seed, "heuristic cut seed");
    solve->add_option("--exact-limit", solve_args.exact_limit, "max n for the exact cut");
    solve->add_option("--out", solve_args.out, "decision-tree file (default stdout)");

    std::string eval_in, eval_tree;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a decision tree");
    eval->add_option("--in", eval_in, "instance file")->required();
    eval->add_option("--tree", eval_tree, "decision-tree file")->required();

    SeparatorArgs sep_args;
    CLI::App* sep = app.add_subcommand("separator", "balanced tree separator");
    sep->add_option("--in", sep_args.in, "tree instance file")->required();
    sep->add_option("--k", sep_args.k, "exact component weight bound");
    sep->add_option("--alpha", sep_args.alpha, "relaxed mode: balance factor, decimal > 1");
    sep->add_option("--delta", sep_args.delta, "relaxed mode: weight slack, decimal > 0");
    sep->add_option("--out", sep_args.out, "output file (default stdout)");

    CutArgs cut_args;
    CLI::App* cut = app.add_subcommand("cut", "minimum-ratio vertex cut");
    cut->add_option("--in", cut_args.in, "instance file")->required();
    cut->add_option("--solver", cut_args.solver, "exact | heuristic")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    cut->add_option("--seed", cut_args.seed, "heuristic seed");
    cut->add_option("--exact-limit", cut_args.exact_limit, "max n for the exact solver");
    cut->add_option("--out", cut_args.out, "output file (default stdout)");

    CompareArgs cmp_args;
    CLI::App* cmp = app.add_subcommand("compare", "ratio experiment report");
    cmp->add_option("--kind", cmp_args.kind, "tree | graph")
        ->check(CLI::IsMember({"tree", "graph"}));
    cmp->add_option("--sizes", cmp_args.sizes, "instance sizes, comma separated")
        ->delimiter(',');
    cmp->add_option("--seeds", cmp_args.seeds, "seeds per size")->check(CLI::Range(0, 1000000));
    cmp->add_option("--seed-base", cmp_args.seed_base, "first seed");
    cmp->add_option("--epsilons", cmp_args.epsilons, "tree kind: epsilon list")->delimiter(',');
    cmp->add_option("--solvers", cmp_args.solvers, "graph kind: cut solver list")
        ->delimiter(',');
    cmp->add_option("--max-cost", cmp_args.max_cost, "costs drawn from [1, max]")
        ->check(CLI::Range(1ll, 1000000000ll));
    cmp->add_option("--max-weight", cmp_args.max_weight, "weights drawn from [1, max]")
        ->check(CLI::Range(1ll, 1000000000ll));
    cmp->add_option("--p", cmp_args.p, "graph kind: edge probability");
    cmp->add_option("--oracle-limit", cmp_args.oracle_limit, "max n for opt/ratio columns")
        ->check(CLI::Range(0, 15));
    cmp->add_option("--format", cmp_args.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmp->add_flag("--timings", cmp_args.timings, "fill the runtime_ms column");
    cmp->add_option("--out", cmp_args.out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_tree->parsed()) return run_gen_tree(gen_args);
        if (gen_graph->parsed()) return run_gen_graph(gen_args);
        if (gen_red->parsed()) return run_gen_reduction(gen_args);
        if (solve->parsed()) return run_solve(solve_args);
        if (eval->parsed()) return run_eval(eval_in, eval_tree);
        if (sep->parsed()) return run_separator(sep_args);
        if (cut->parsed()) return run_cut(cut_args);
        if (cmp->parsed()) return run_compare(cmp_args);
    } catch (const gsp::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const gsp::Error& e) {
        // parse errors, validation errors, NoCut, preconditions: bad input
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
