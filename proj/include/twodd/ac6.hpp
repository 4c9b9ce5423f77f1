#pragma once

#include <string>

#include "twodd/graph.hpp"

namespace twodd {

// The ten forms a six-arc AC can take as a standalone 2-digraph, named by
// their saturated-vertex structure: nL = n loop vertices, nS = n loop-free
// saturated vertices; the c suffix marks the closed forms.
enum class Ac6Name { XClean, X1L, X1S, X2L, X2S, Xc2L, Xc1L1S, Xc2L1S, Xc3L, Xc3S };

const char* to_string(Ac6Name n);
Ac6Name ac6_name_from_string(const std::string& s);

struct Ac6Class {
  Ac6Name name;
  int vertices = 0;
  int loops = 0;
  int exit_entry = 0;    // exit count == entry count
  int open_factors = 0;  // out of the two factors
  int open_routes = 0;
  bool closed = false;
};

// Classify a standalone six-arc single-AC 2-digraph against the ten forms.
Ac6Class classify_ac6(const TwoDigraph& standalone);
// Classify an AC of a larger graph via its induced subgraph.
Ac6Class classify_ac6(const TwoDigraph& g, int ac_index);

}  // namespace twodd
