#include "gsp/strategy.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace gsp {

namespace {

void build_partial(const SearchInstance& g, const VertexSet& s, const VertexSet& cand,
                   int parent_vertex, PartialDecisionTree& out) {
    VertexSet in_s = cand & s;
    internal_check(!in_s.empty(), "candidate subgraph lost its separator");
    const int v = in_s.first();
    out.parent[v] = parent_vertex;
    if (parent_vertex < 0) out.root = v;
    out.covered.add(v);
    VertexSet removed(g.n);
    removed.add(v);
    for (const auto& comp : components(g, removed, cand)) {
        if (comp.vertices.intersects(s))
            build_partial(g, s, comp.vertices, v, out);
        else
            out.attach_points.push_back({comp.vertices, v});
    }
}

// Chain the vertices of a complete candidate subgraph in increasing
// cost-per-weight order (zero weights last, ties by index): on a clique
// every decision tree is a chain, and this order is the cheapest one.
std::vector<int> cheapest_chain_order(const SearchInstance& g, const VertexSet& scope) {
    std::vector<int> order = scope.to_vector();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int128 lhs = static_cast<int128>(g.cost[a]) * g.weight[b];
        const int128 rhs = static_cast<int128>(g.cost[b]) * g.weight[a];
        if (lhs != rhs) return lhs < rhs;
        return a < b;
    });
    return order;
}

struct Driver {
    const SearchInstance& g;
    // Separator for the (connected, positive-weight, non-singleton) scope;
    // nullopt means the scope is complete and should be chained.
    std::function<std::optional<VertexSet>(const VertexSet&)> separator_for;
    SolveStats* stats = nullptr;
    std::vector<int> parent;
    int root = -1;

    Driver(const SearchInstance& inst, SolveStats* st)
        : g(inst), stats(st), parent(inst.n, -2) {
        if (stats) *stats = SolveStats{};
    }

    void note(int depth, long long covered) {
        if (!stats) return;
        stats->max_depth = std::max(stats->max_depth, depth);
        if (static_cast<int>(stats->covered_per_level.size()) <= depth)
            stats->covered_per_level.resize(depth + 1, 0);
        stats->covered_per_level[depth] += covered;
    }

    void place_root(int v, int attach_after) {
        parent[v] = attach_after;
        if (attach_after < 0) root = v;
    }

    void splice(const PartialDecisionTree& pt, int attach_after) {
        for (int v : pt.covered) parent[v] = pt.parent[v];
        place_root(pt.root, attach_after);
    }

    void rec(const VertexSet& scope, int attach_after, int depth) {
        const int size = scope.count();
        if (size == 1) {
            place_root(scope.first(), attach_after);
            note(depth, 1);
            return;
        }
        InducedSubgraph sub{&g, scope};
        if (g.weight_of(scope) == 0) {
            // Nothing in here contributes cost; emit any valid tree at once.
            PartialDecisionTree pt = partial_tree_from_separator(sub, scope);
            internal_check(pt.attach_points.empty(), "full separator left vertices uncovered");
            splice(pt, attach_after);
            note(depth, size);
            return;
        }
        std::optional<VertexSet> s = separator_for(scope);
        if (!s) {
            int prev = attach_after;
            for (int v : cheapest_chain_order(g, scope)) {
                place_root(v, prev);
                prev = v;
            }
            note(depth, size);
            return;
        }
        PartialDecisionTree pt = partial_tree_from_separator(sub, *s);
        splice(pt, attach_after);
        note(depth, s->count());
        for (const auto& ap : pt.attach_points) rec(ap.component, ap.after, depth + 1);
    }

    DecisionTree finish() {
        DecisionTree d = DecisionTree::from_parent_array(root, std::move(parent));
        validate(g, d);  // outputs are valid by construction; fail loudly if not
        return d;
    }
};

}  // namespace

PartialDecisionTree partial_tree_from_separator(const InducedSubgraph& sub, const VertexSet& s) {
    const SearchInstance& g = *sub.parent;
    if (s.empty()) throw EmptySeparator("partial tree needs a nonempty separator");
    if (!s.subset_of(sub.vertices))
        throw PreconditionViolated("separator reaches outside the subgraph");
    if (components(g, VertexSet(g.n), sub.vertices).size() != 1)
        throw Disconnected("partial tree needs a connected subgraph");

    PartialDecisionTree pt;
    pt.parent.assign(g.n, -2);
    pt.covered = VertexSet(g.n);
    build_partial(g, s, sub.vertices, -1, pt);
    internal_check(pt.covered == s, "partial tree must cover exactly the separator");
    internal_check(attach_paths_consistent(sub, pt), "attach point off its component's path");
    return pt;
}

bool attach_paths_consistent(const InducedSubgraph& sub, const PartialDecisionTree& p) {
    const SearchInstance& g = *sub.parent;
    for (const auto& ap : p.attach_points) {
        VertexSet nb = neighbors_of_subgraph(g, ap.component) & sub.vertices;
        if (!nb.subset_of(p.covered)) return false;
        if (!nb.test(ap.after)) return false;  // the creating query neighbors it
        VertexSet on_path(g.n);
        for (int x = ap.after; x >= 0; x = p.parent[x]) on_path.add(x);
        if (!nb.subset_of(on_path)) return false;
    }
    return true;
}

DecisionTree solve_tree(const SearchInstance& t, const Rat& eps, SolveStats* stats) {
    if (!t.is_tree()) throw NotATree("tree solver expects a tree instance");
    if (!eps.positive()) throw InvalidEpsilon("epsilon must be positive");
    if (eps.den > (std::numeric_limits<long long>::max() - eps.num) / 4)
        throw InvalidParams("epsilon is too extreme to scale");
    const Rat delta(eps.num, 4 * eps.den + eps.num);  // eps/(4+eps), exact
    const Rat alpha(2, 1);

    Driver driver(t, stats);
    driver.separator_for = [&](const VertexSet& scope) -> std::optional<VertexSet> {
        auto [sub, to_old] = extract_instance(t, scope);
        SeparatorResult r = separator_fptas(sub, alpha, delta);
        // Balance contract, resurfaced: each remaining component weighs at
        // most (1+delta)/2 of the scope.
        for (const auto& h : r.components)
            internal_check(static_cast<int128>(2) * h.weight() * delta.den <=
                               static_cast<int128>(delta.den + delta.num) * sub.total_weight(),
                           "unbalanced component escaped the separator program");
        VertexSet s(t.n);
        for (int v : r.separator) s.add(to_old[v]);
        return s;
    };
    driver.rec(VertexSet::all(t.n), -1, 0);
    return driver.finish();
}

DecisionTree solve_graph(const SearchInstance& g, const CutSolver& solver, SolveStats* stats) {
    if (!g.is_connected()) throw Disconnected("graph solver expects a connected instance");

    Driver driver(g, stats);
    driver.separator_for = [&](const VertexSet& scope) -> std::optional<VertexSet> {
        auto [sub, to_old] = extract_instance(g, scope);
        VertexCut cut;
        try {
            cut = solve_cut(sub, solver);
        } catch (const NoCut&) {
            return std::nullopt;  // complete candidate subgraph: chain it
        }
        VertexSet s(g.n);
        for (int v : cut.s) s.add(to_old[v]);
        return s;
    };
    driver.rec(VertexSet::all(g.n), -1, 0);
    return driver.finish();
}

}  // namespace gsp
