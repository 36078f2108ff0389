#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsp/instance.hpp"
#include "gsp/rational.hpp"
#include "gsp/vertex_set.hpp"

namespace gsp {

// Partition (A, S, B) of the vertices with no edge between A and B and both
// sides nonempty, scored by c(S) / (w(A+S) * w(B+S)). Solvers normalize so
// that w(A) >= w(B), breaking ties toward the side holding the lowest
// vertex. Connected graphs in which every pair of vertices is adjacent
// admit no such partition; solvers throw NoCut there.
struct VertexCut {
    VertexSet a, s, b;
    long long cut_cost = 0;
    Rat ratio;  // exact, reduced
};

// True iff (a, s, b) partitions V, a and b are nonempty, and no edge joins
// a to b. Does not inspect cut.ratio.
bool cut_valid(const SearchInstance& g, const VertexCut& cut);

// Minimum-ratio cut by exhaustive enumeration of separators (n <= 18); the
// components left by each candidate separator are packed onto the two sides
// so the product of side weights is maximal. Ties: smaller c(S), then the
// lexicographically smallest S.
VertexCut cut_exact(const SearchInstance& g);

// Best cut among three deterministic families: every articulation vertex as
// a single-vertex separator, breadth-first layers from a few seeded source
// vertices, and V minus the first nonadjacent pair. Same side packing and
// tie-breaking as cut_exact. No approximation guarantee.
VertexCut cut_heuristic(const SearchInstance& g, uint64_t seed);

// Pluggable strategy for the search recursion.
struct CutSolver {
    enum class Kind { exact, heuristic };
    Kind kind = Kind::exact;
    uint64_t seed = 0;
    int exact_limit = 18;
};
VertexCut solve_cut(const SearchInstance& g, const CutSolver& solver);

// Splits the components of g - separator into two groups by descending
// weight, each component joining the currently lighter group. Requires
// every component to weigh at most w(G)/2; then the grouping satisfies
// (6 + 2*sqrt(5)) * w(A+S) * w(B+S) >= w(G)^2, which is verified on every
// call in exact integer arithmetic. Returned sets exclude the separator.
std::pair<VertexSet, VertexSet> lambda_partition(const SearchInstance& g,
                                                 const VertexSet& separator);

}  // namespace gsp
