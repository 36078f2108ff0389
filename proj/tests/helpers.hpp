#pragma once

// Shared fixtures and reference implementations for the test suite. The
// reference implementations are deliberately independent of the library
// code paths they check: plain recursion, no memoization, no bitset tricks.

#include <random>
#include <utility>
#include <vector>

#include "gsp/decision_tree.hpp"
#include "gsp/instance.hpp"
#include "gsp/vertex_set.hpp"

namespace th {

using gsp::SearchInstance;
using gsp::VertexSet;

using EdgeList = std::vector<std::pair<int, int>>;

inline SearchInstance make(int n, const EdgeList& edges, std::vector<long long> cost,
                           std::vector<long long> weight) {
    return SearchInstance(n, edges, std::move(cost), std::move(weight));
}

inline SearchInstance unit(int n, const EdgeList& edges) {
    return make(n, edges, std::vector<long long>(n, 1), std::vector<long long>(n, 1));
}

inline EdgeList path_edges(int n) {
    EdgeList e;
    for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return e;
}

inline EdgeList star_edges(int n) {  // center 0
    EdgeList e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return e;
}

inline EdgeList cycle_edges(int n) {
    EdgeList e = path_edges(n);
    if (n > 2) e.emplace_back(0, n - 1);
    return e;
}

inline EdgeList complete_edges(int n) {
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return e;
}

// Caterpillar: spine path 0..s-1, legs[i] extra leaves hanging off spine
// vertex i, numbered s, s+1, ... in spine order.
inline EdgeList caterpillar_edges(int spine, const std::vector<int>& legs) {
    EdgeList e = path_edges(spine);
    int next = spine;
    for (int i = 0; i < spine; ++i)
        for (int j = 0; j < legs[i]; ++j) e.emplace_back(i, next++);
    return e;
}

// All caterpillar shapes on n vertices: every spine length s in [1, n] and
// every composition of n - s leaves over the s spine positions. Paths and
// stars are the extreme cases. fn receives (spine, legs).
template <typename Fn>
void for_each_caterpillar(int n, Fn&& fn) {
    for (int s = 1; s <= n; ++s) {
        std::vector<int> legs(s, 0);
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == s - 1) {
                legs[i] = left;
                fn(s, legs);
                return;
            }
            for (int take = 0; take <= left; ++take) {
                legs[i] = take;
                self(self, i + 1, left - take);
            }
        };
        rec(rec, 0, n - s);
    }
}

// Hand-checked 12-vertex fixture: a connected graph, a valid decision tree
// for it, and that tree's unit-cost total of 44. Query path to vertex 11 is
// 4, 8, 6, 10, 11.
inline SearchInstance worked_example() {
    EdgeList e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 7}, {1, 2}, {3, 5}, {3, 8},
                  {4, 7}, {4, 8}, {4, 9}, {6, 9}, {6, 11}, {8, 9}, {8, 10}, {10, 11}};
    return unit(12, e);
}

inline gsp::DecisionTree worked_example_tree() {
    return gsp::DecisionTree::from_parent_array(4, {8, 2, 0, 5, -1, 0, 8, 0, 4, 6, 6, 10});
}

// Uniformly random valid decision tree: pick any vertex of the candidate
// component as the query, recurse into the components it leaves.
inline gsp::DecisionTree random_decision_tree(const SearchInstance& g, std::mt19937_64& rng) {
    std::vector<int> parent(g.n, -2);
    int root = -1;
    auto rec = [&](auto&& self, const VertexSet& region, int par) -> void {
        std::vector<int> members = region.to_vector();
        int v = members[gsp::rand_below(rng, members.size())];
        parent[v] = par;
        if (par < 0) root = v;
        for (const auto& comp : gsp::components(g, VertexSet::of(g.n, {v}), region))
            self(self, comp.vertices, v);
    };
    rec(rec, VertexSet::all(g.n), -1);
    return gsp::DecisionTree::from_parent_array(root, std::move(parent));
}

// Reference optimum by plain recursion, no memoization. Exponential; keep
// n small (<= 9 or so).
inline long long opt_cost_plain(const SearchInstance& g, const VertexSet& region) {
    long long w = g.weight_of(region);
    long long best = -1;
    for (int v : region) {
        long long total = w * g.cost[v];
        for (const auto& comp : gsp::components(g, VertexSet::of(g.n, {v}), region))
            total += opt_cost_plain(g, comp.vertices);
        if (best < 0 || total < best) best = total;
    }
    return best;
}

inline long long opt_cost_plain(const SearchInstance& g) {
    return opt_cost_plain(g, VertexSet::all(g.n));
}

// Copy of g with roughly one in `one_in` weights set to zero, always
// leaving at least one positive weight.
inline SearchInstance with_some_zero_weights(const SearchInstance& g, std::mt19937_64& rng,
                                             uint64_t one_in) {
    std::vector<long long> w = g.weight;
    for (auto& x : w)
        if (gsp::rand_below(rng, one_in) == 0) x = 0;
    bool any = false;
    for (long long x : w) any = any || x > 0;
    if (!any) w[gsp::rand_below(rng, w.size())] = 1;
    return make(g.n, g.edge_list(), g.cost, w);
}

}  // namespace th
