#include "gsp/oracle.hpp"

#include <bit>
#include <vector>

namespace gsp {

namespace {

struct OptSolver {
    const SearchInstance& g;
    std::vector<uint32_t> adj_mask;
    std::vector<long long> memo_cost;  // -1 = not computed
    std::vector<int> memo_root;

    explicit OptSolver(const SearchInstance& inst) : g(inst) {
        adj_mask.assign(g.n, 0);
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u]) adj_mask[u] |= 1u << v;
        memo_cost.assign(size_t{1} << g.n, -1);
        memo_root.assign(size_t{1} << g.n, -1);
    }

    // Components of mask, lowest vertex first.
    std::vector<uint32_t> comps_of(uint32_t mask) const {
        std::vector<uint32_t> out;
        while (mask) {
            uint32_t frontier = mask & (~mask + 1), comp = 0;
            while (frontier) {
                comp |= frontier;
                uint32_t grow = 0;
                for (uint32_t m = frontier; m; m &= m - 1) grow |= adj_mask[std::countr_zero(m)];
                frontier = grow & mask & ~comp;
            }
            out.push_back(comp);
            mask &= ~comp;
        }
        return out;
    }

    long long solve(uint32_t mask) {
        if (memo_cost[mask] >= 0) return memo_cost[mask];
        long long mask_weight = 0;
        for (uint32_t m = mask; m; m &= m - 1) mask_weight += g.weight[std::countr_zero(m)];
        long long best = -1;
        int best_root = -1;
        for (uint32_t m = mask; m; m &= m - 1) {
            int v = std::countr_zero(m);
            long long total = mask_weight * g.cost[v];
            for (uint32_t comp : comps_of(mask & ~(1u << v))) total += solve(comp);
            if (best < 0 || total < best) {
                best = total;
                best_root = v;  // ascending scan keeps the lowest root on ties
            }
        }
        memo_cost[mask] = best;
        memo_root[mask] = best_root;
        return best;
    }

    void rebuild(uint32_t mask, int parent, std::vector<int>& parent_of) {
        int r = memo_root[mask];
        parent_of[r] = parent;
        for (uint32_t comp : comps_of(mask & ~(1u << r))) rebuild(comp, r, parent_of);
    }
};

}  // namespace

OracleResult opt_decision_tree(const SearchInstance& g) {
    if (g.n > 15) throw TooLarge("exact optimum is limited to 15 vertices");
    if (!g.is_connected()) throw Disconnected("exact optimum requires a connected instance");
    OptSolver solver(g);
    const uint32_t full = (1u << g.n) - 1;
    OracleResult result;
    result.cost = solver.solve(full);
    std::vector<int> parent_of(g.n, -2);
    solver.rebuild(full, -1, parent_of);
    result.tree = DecisionTree::from_parent_array(solver.memo_root[full], std::move(parent_of));
    return result;
}

LevelFamily opt_levels(const SearchInstance& g) {
    OracleResult opt = opt_decision_tree(g);
    LevelFamily fam = levels(g, opt.tree);
    // Sum of level costs over [0, w(G)) collapses to the contribution form.
    internal_check(cost_contribution(g, opt.tree) == opt.cost,
                   "level costs do not sum to the optimum");
    internal_check(fam.halved_cost_sum() <= 2 * opt.cost,
                   "halved level-cost sum exceeded twice the optimum");
    return fam;
}

}  // namespace gsp
