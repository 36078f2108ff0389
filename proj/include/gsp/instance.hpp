#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gsp/errors.hpp"
#include "gsp/rational.hpp"
#include "gsp/vertex_set.hpp"

namespace gsp {

// An undirected search instance: simple connected graph plus a nonnegative
// integer query cost and target weight per vertex. Construction checks the
// structural invariants (ids in range, no loops, no duplicate edges);
// connectivity and positive total weight are required of top-level instances
// via require_valid_toplevel(), which every load/generate path calls.
// Subproblem instances carved out of a larger one may legitimately have
// total weight zero.
struct SearchInstance {
    int n = 0;
    std::vector<std::vector<int>> adj;  // per vertex, ascending
    std::vector<long long> cost;
    std::vector<long long> weight;

    SearchInstance() = default;
    SearchInstance(int n, const std::vector<std::pair<int, int>>& edges,
                   std::vector<long long> cost, std::vector<long long> weight);

    int edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted

    long long total_weight() const;
    long long total_cost() const;
    long long weight_of(const VertexSet& s) const;
    long long cost_of(const VertexSet& s) const;

    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count() == n - 1; }

    void require_valid_toplevel() const;  // throws ValidationError / Disconnected
};

// A vertex-induced subgraph, represented as a view on the parent instance.
struct InducedSubgraph {
    const SearchInstance* parent = nullptr;
    VertexSet vertices;

    int size() const { return vertices.count(); }
    long long weight() const { return parent->weight_of(vertices); }
    long long cost() const { return parent->cost_of(vertices); }
};

// Connected components of the graph induced on (within - removed), ordered
// by ascending minimum vertex id. Requires removed, within to be subsets of
// the vertex range; removed need not be a subset of within.
std::vector<InducedSubgraph> components(const SearchInstance& g, const VertexSet& removed,
                                        const VertexSet& within);

// Vertices outside `sub` with at least one neighbor inside it.
VertexSet neighbors_of_subgraph(const SearchInstance& g, const VertexSet& sub);

// Standalone copy of the subgraph induced on `vs`, with vertices renumbered
// 0..k-1 in ascending original order; second element maps new id -> old id.
std::pair<SearchInstance, std::vector<int>> extract_instance(const SearchInstance& g,
                                                             const VertexSet& vs);

// --- JSON interchange ------------------------------------------------------
// {"n": int, "edges": [[u,v],...], "cost": [...], "weight": [...]}
// Edges are listed once with u < v. load_instance validates everything,
// including connectivity and total weight >= 1.
SearchInstance load_instance(const std::string& json_text);
SearchInstance load_instance_file(const std::string& path);
std::string save_instance(const SearchInstance& g);
void save_instance_file(const SearchInstance& g, const std::string& path);

// --- deterministic generators ----------------------------------------------
// Same seed, same build -> identical instance, byte for byte on disk.

// Uniform random attachment tree; costs and weights uniform in [1, max_*].
SearchInstance gen_random_tree(int n, long long max_cost, long long max_weight, uint64_t seed);

// Bernoulli(p) edges; if the result is disconnected, consecutive components
// are linked through their minimum-id vertices. p is exact (no doubles).
SearchInstance gen_random_graph(int n, const Rat& edge_prob, long long max_cost,
                                long long max_weight, uint64_t seed);

// Edge-subdivision gadget: every edge e of the tree becomes a fresh vertex
// v_e with weight 0 and cost 1 (ids n..n+m-1 in edge-list order), original
// vertices keep their weight and get cost budget+1. transformed_budget is
// budget + w(T)*(budget+1).
struct HardnessReduction {
    SearchInstance instance;
    long long transformed_budget = 0;
};
HardnessReduction hardness_reduction(const SearchInstance& t, long long budget);

// Deterministic helper used by all seeded code: uniform in [0, m). Avoids
// std::uniform_int_distribution, whose output is implementation-defined.
inline uint64_t rand_below(std::mt19937_64& rng, uint64_t m) { return m ? rng() % m : 0; }

}  // namespace gsp
