#pragma once

#include "gsp/decision_tree.hpp"
#include "gsp/instance.hpp"

namespace gsp {

struct OracleResult {
    DecisionTree tree;
    long long cost = 0;
};

// Provably optimal decision tree by memoized recursion over connected
// candidate sets: OPT(C) = min over roots v of w(C)*c(v) + sum of OPT over
// the components of C - v. Ties go to the lowest-indexed root. Requires a
// connected instance with n <= 15.
OracleResult opt_decision_tree(const SearchInstance& g);

// Level family of an optimal decision tree. Verifies that the level costs
// sum back to the optimal cost and that the halved-index level-cost sum is
// at most twice the optimum before returning.
LevelFamily opt_levels(const SearchInstance& g);

}  // namespace gsp
