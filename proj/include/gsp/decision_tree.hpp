#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gsp/instance.hpp"
#include "gsp/vertex_set.hpp"

namespace gsp {

// A search strategy: querying the root either confirms the target or names
// the component of the remaining candidate subgraph it lies in, and the
// child responsible for that component is queried next. Stored as a parent
// array; children are kept sorted ascending and carry no semantics.
struct DecisionTree {
    int root = -1;
    std::vector<int> parent;  // -1 exactly at the root

    static DecisionTree from_parent_array(int root, std::vector<int> parent);

    std::vector<std::vector<int>> children() const;  // ascending per node
};

// JSON interchange: {"root": int, "parent": [int or null, ...]} with null
// exactly at the root.
DecisionTree load_decision_tree(const std::string& json_text);
DecisionTree load_decision_tree_file(const std::string& path);
std::string save_decision_tree(const DecisionTree& d);
void save_decision_tree_file(const DecisionTree& d, const std::string& path);

// Candidate subgraph in which each vertex is queried.
struct CandidateMap {
    std::vector<VertexSet> candidate;  // indexed by vertex
};

// Checks that d is a wellformed decision tree for g -- every vertex appears
// exactly once, and each node's children live in distinct components of the
// node's candidate subgraph minus the node -- and returns the candidate map.
// Throws InvalidTree with a reason otherwise.
CandidateMap validate(const SearchInstance& g, const DecisionTree& d);

// Total cost as the weighted sum over targets of their query-sequence cost.
long long cost_pathsum(const SearchInstance& g, const DecisionTree& d);

// Same total, computed as sum over vertices of w(candidate) * cost(vertex).
// Equal to cost_pathsum on every valid tree.
long long cost_contribution(const SearchInstance& g, const DecisionTree& d);

// Queries made when searching for `target`, in order; ends with target.
std::vector<int> query_sequence(const SearchInstance& g, const DecisionTree& d, int target);

// Level sets of a valid decision tree: S_k = vertices whose candidate
// subgraph weighs more than k. S_{k+1} is contained in S_k, and the level
// costs summed for k in [0, w(G)) reproduce the tree's total cost. Levels
// are materialized on demand.
struct LevelFamily {
    const SearchInstance* g = nullptr;
    std::vector<long long> candidate_weight;  // per vertex

    long long total_weight() const { return g->total_weight(); }
    VertexSet level(long long k) const {
        VertexSet s(g->n);
        for (int v = 0; v < g->n; ++v)
            if (candidate_weight[v] > k) s.add(v);
        return s;
    }
    long long level_cost(long long k) const {
        long long c = 0;
        for (int v = 0; v < g->n; ++v)
            if (candidate_weight[v] > k) c += g->cost[v];
        return c;
    }

    // Sum over k in [0, w(G)] of level_cost(k/2), in closed form: vertex v
    // belongs to the halved level exactly for k <= 2*candidate_weight(v)-1.
    long long halved_cost_sum() const {
        long long total = 0;
        for (int v = 0; v < g->n; ++v)
            total += g->cost[v] * std::min(total_weight() + 1, 2 * candidate_weight[v]);
        return total;
    }
};

LevelFamily levels(const SearchInstance& g, const DecisionTree& d);

}  // namespace gsp
