#pragma once

#include <array>
#include <vector>

#include "twodd/graph.hpp"

namespace twodd {

// Canonical form of a directed multigraph: the lexicographically smallest
// sorted (tail, head) index-pair list over all vertex orderings compatible
// with an iterated degree-class refinement.  Intended for the small graphs
// that occur in enumeration and tests; cost grows with class symmetry.
std::vector<std::array<int, 2>> canonical_encoding(const TwoDigraph& g);

bool isomorphic(const TwoDigraph& a, const TwoDigraph& b);

}  // namespace twodd
