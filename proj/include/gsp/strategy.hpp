#pragma once

#include "gsp/cut.hpp"
#include "gsp/decision_tree.hpp"
#include "gsp/instance.hpp"
#include "gsp/rational.hpp"
#include "gsp/separator.hpp"

namespace gsp {

struct AttachPoint {
    VertexSet component;  // uncovered candidate component, parent-instance ids
    int after = -1;       // node whose query turns `component` into the candidate set
};

// Decision tree over a subset of a subgraph's vertices. The remaining
// vertices form components, each with a unique attach point: hanging a
// decision tree for the component below that node keeps the whole valid.
struct PartialDecisionTree {
    int root = -1;
    std::vector<int> parent;  // instance-sized; -1 at the root, -2 where uncovered
    VertexSet covered;
    std::vector<AttachPoint> attach_points;  // discovery order (preorder, ascending)
};

// Builds the canonical partial tree for separator s inside the connected
// subgraph sub: each candidate subgraph meeting s queries its lowest-indexed
// member of s; components disjoint from s become attach points. s must be a
// nonempty subset of sub's vertices.
PartialDecisionTree partial_tree_from_separator(const InducedSubgraph& sub, const VertexSet& s);

// True when, for every attach component, the queried neighbors of the
// component all lie on the root path of its attach point, which is itself
// one of those neighbors. Holds by construction; rechecked in tests.
bool attach_paths_consistent(const InducedSubgraph& sub, const PartialDecisionTree& p);

struct SolveStats {
    int max_depth = 0;                         // root level = 0
    std::vector<long long> covered_per_level;  // separator / block sizes by level
};

// (4+eps)-approximation for trees: query a balanced separator found by the
// scaled separator program (alpha = 2, delta = eps/(4+eps)), then recurse on
// the remaining components. eps must be positive; arithmetic on the
// guarantee is exact rational.
DecisionTree solve_tree(const SearchInstance& t, const Rat& eps, SolveStats* stats = nullptr);

// Cut-driven solver for connected graphs: query the separator of a
// minimum-ratio vertex cut, then recurse on the remaining components. With
// the exact cut solver the cost is within 12+4*sqrt(5) of optimal. Complete
// candidate subgraphs, which admit no two-sided cut, fall back to an exactly
// optimal query chain in increasing cost-per-weight order.
DecisionTree solve_graph(const SearchInstance& g, const CutSolver& solver,
                         SolveStats* stats = nullptr);

}  // namespace gsp
