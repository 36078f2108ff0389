#pragma once

#include <vector>

#include "gsp/instance.hpp"
#include "gsp/rational.hpp"
#include "gsp/vertex_set.hpp"

namespace gsp {

// A vertex separator together with the components it leaves behind.
struct SeparatorResult {
    VertexSet separator;
    std::vector<InducedSubgraph> components;  // of t - separator, ascending min id
    long long separator_cost = 0;
};

// Observability hook for the scaled-weight corner of the dynamic program:
// counts how often a child contributes a weight-zero open component strictly
// cheaper than putting the child into the separator. Zero-weight vertices
// are the only way to hit it.
struct SeparatorDpStats {
    long long zero_weight_open_child_wins = 0;
};

// Minimum-cost vertex set S such that every component of t - S weighs at
// most k. Tree instances only. Dynamic program over the tree rooted at
// vertex 0, O(n * k^2); ties between closing a vertex into S and leaving it
// open resolve toward S, then toward the smallest open-component weight.
// S = V is always feasible, so every k >= 0 has an answer.
SeparatorResult separator_exact(const SearchInstance& t, long long k,
                                SeparatorDpStats* stats = nullptr);

// Bicriteria relaxation: returns S no more expensive than the cheapest
// separator whose components weigh at most w(T)/alpha, while its own
// components may weigh up to (1+delta) * w(T)/alpha. Weights are scaled by
// the exact rational K = delta*w(T)/(n*alpha) and floored in integer
// arithmetic; when K <= 1 the exact program runs unscaled. Requires
// alpha > 1, delta > 0, w(T) >= 1.
SeparatorResult separator_fptas(const SearchInstance& t, const Rat& alpha, const Rat& delta,
                                SeparatorDpStats* stats = nullptr);

// Reference oracle: enumerate all vertex subsets (n <= 20) and keep the
// cheapest feasible separator, scanning subsets in ascending mask order.
// Works on arbitrary graphs, not just trees.
SeparatorResult separator_bruteforce(const SearchInstance& g, long long k);

}  // namespace gsp
