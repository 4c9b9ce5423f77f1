#pragma once

#include <optional>
#include <vector>

#include "twodd/ac6.hpp"
#include "twodd/certificate.hpp"
#include "twodd/factors.hpp"
#include "twodd/graph.hpp"

namespace twodd {

inline constexpr int kDefaultClosedSubsetCap = 14;

// Minor defined by an open route r of the subgraph induced by K: delete
// K's arcs, identify each (u, r(u)) pair (the merged vertex keeps the entry
// vertex's label), drop isolated vertices.  The minor's ACs are exactly the
// complement of K.
struct Minor {
  TwoDigraph graph;
  std::vector<int> k;  // AC indices in the source graph
  Route route;
};

Minor minor(const TwoDigraph& g, const std::vector<int>& k, const Route& r);

// One minor per distinct open route of K; empty iff K is closed.
std::vector<Minor> quotient(const TwoDigraph& g, const std::vector<int>& k);

// Repeatedly eliminates dirty ACs of a graph whose ACs all have six arcs:
// an AC classified Xc2L or Xc1L1S certifies non-Hamiltonicity outright; an
// AC in {X1L, X1S, X2L, X2S} has a unique open route and is replaced by its
// minor (Hamiltonian-equivalent); a disconnected minor also certifies
// non-Hamiltonicity.  A single-AC graph is returned unchanged.
struct DirtyEliminationResult {
  std::optional<Certificate> certificate;
  TwoDigraph reduced;
  std::vector<MinorStep> chain;
};
DirtyEliminationResult eliminate_dirty(const TwoDigraph& g);

// Smallest (by size, then lexicographic) nonempty proper K whose induced
// subgraph is closed.  A closed proper subset certifies non-Hamiltonicity
// for any 2-dd; for odd six-arc-AC graphs its absence certifies
// Hamiltonicity.
std::optional<std::vector<int>> closed_subset_search(const TwoDigraph& g,
                                                     int cap = kDefaultClosedSubsetCap);

struct CertifyOptions {
  int factor_cap = kDefaultAcCap;
  int closed_subset_cap = kDefaultClosedSubsetCap;
  bool exhaustive = false;
};

// Decision pipeline for a 2-dd: connectivity, dirty elimination (six-arc
// families), split parity, closed subset, brute force under the cap.
// Undecided is a legitimate outcome above the caps.
Certificate certify(const TwoDigraph& g, const CertifyOptions& opts = {});

// Re-checks a certificate from its witness alone.
bool verify_certificate(const TwoDigraph& g, const Certificate& cert);

// For a connected odd non-Hamiltonian graph with six-arc ACs: every open
// AC must have a closed complement.
bool check_complement_closed(const TwoDigraph& g, int cap = kDefaultAcCap);

// Checks the factor bijection between a minor and the factors of g that
// agree with the given open factor on K: matched factors must agree in
// component count and index.
bool verify_reduction_bijection(const TwoDigraph& g, const std::vector<int>& k,
                                const Selection& f_on_k);

}  // namespace twodd
