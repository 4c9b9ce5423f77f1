#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twodd/certificate.hpp"
#include "twodd/factors.hpp"
#include "twodd/graph.hpp"

namespace twodd {

struct SplitSet {
  std::vector<VertexId> vertices;  // sorted
  bool minimal = false;
};

// True iff splitting every vertex of s increases the weak component count.
bool is_split_set(const TwoDigraph& g, const std::vector<VertexId>& s);

// All inclusion-minimal split sets of size <= max_size, by increasing size
// then lexicographically.  Minimality is established by checking proper
// subsets directly.
std::vector<SplitSet> minimal_split_sets(const TwoDigraph& g, int max_size = 4);

// Weak components after splitting s, as standalone graphs (labels kept
// from the split graph), ordered by smallest vertex.
std::vector<TwoDigraph> split_components(const TwoDigraph& g, const std::vector<VertexId>& s);

// For a minimal split pair {u, v} of a connected 2-dd: split both, splice
// each component's entry half with its exit half.  First component is the
// one containing u_in (which keeps label u after the splice), second v.
std::pair<TwoDigraph, TwoDigraph> splice_pair(const TwoDigraph& g, VertexId u, VertexId v);

// Iterative split certification for connected 2-dds whose ACs are all odd.
// Every factor of such a graph has the same index parity, so one factor
// decides each piece: an even piece certifies non-Hamiltonicity of the
// root; odd pieces are split further while a minimal split pair exists.
// With exhaustive set, each one-factor parity decision is cross-checked
// against the full factor scan (MixedParityFound on disagreement).
struct SplitCertifyOutcome {
  std::optional<Certificate> certificate;  // NonHamiltonian / SplitParity
  std::vector<TwoDigraph> pieces;          // irreducible odd pieces when undecided
};
SplitCertifyOutcome certify_by_splitting(const TwoDigraph& g, bool exhaustive = false);

// Inverse construction: split v1 in even g1 and v2 in even g2 and splice
// the halves crosswise.  The result has only odd-index factors and is
// non-Hamiltonian.  g2's labels are shifted above g1's.
TwoDigraph even_pair_splice(const TwoDigraph& g1, const TwoDigraph& g2, VertexId v1, VertexId v2,
                            int cap = kDefaultAcCap);

}  // namespace twodd
