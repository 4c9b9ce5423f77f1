#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "twodd/factors.hpp"
#include "twodd/graph.hpp"

namespace twodd {

// Family of 2-digraphs with m ACs of 2k arcs each, optionally restricted.
// AC parity is fixed by k (an AC of 2k arcs is odd iff k is odd), so the
// odd/even constraints can only keep or empty a family.
struct FamilySpec {
  int k = 3;
  int m = 1;
  bool saturated = false;
  std::optional<bool> clean;      // true: clean only, false: dirty only
  std::optional<bool> connected;  // true: connected only, false: disconnected only
  std::optional<bool> odd_acs;
};

struct EnumerationOptions {
  long long budget = 10'000'000;  // candidate gluings per run
};

// Exhaustive isomorphism-free enumeration.  Graphs with m ACs of length 2k
// are exactly the gluings of m disjoint clean ACs under a partial matching
// of entry slots to exit slots (perfect matchings give the saturated
// family); isomorphism classes are orbits of the matching under the AC
// symmetries (per-AC dihedral group and AC permutations), and one
// lexicographically minimal representative per orbit is emitted.
void enumerate_family(const FamilySpec& spec, const std::function<void(const TwoDigraph&)>& fn,
                      const EnumerationOptions& opts = {});
std::vector<TwoDigraph> enumerate_family_vec(const FamilySpec& spec,
                                             const EnumerationOptions& opts = {});

struct CensusRow {
  FamilySpec family;
  long long total = 0;
  long long connected = 0;
  long long clean_odd_nonham = 0;  // connected, clean, odd, non-Hamiltonian
  long long split_decided = 0;     // of those, decided by split certification
};
CensusRow census(const FamilySpec& spec, const EnumerationOptions& opts = {});

// Splices every unsaturated vertex of a connected closed graph h with the
// matching unsaturated vertices of g (sorted labels paired in order).  The
// result is saturated and contains h's AC set as a closed proper subset,
// hence is non-Hamiltonian.  g's labels are shifted above h's.
TwoDigraph construct_closed_splice(const TwoDigraph& h, const TwoDigraph& g,
                                   int cap = kDefaultAcCap);

// g1 must have a unique open route r.  Splits the |r| smallest vertices of
// non-Hamiltonian g2 and splices them with g1's unsaturated vertices so
// that whenever an entry u goes to some v_in, r(u) goes to the matching
// v_out.  The K-quotient at g1's ACs is then a singleton isomorphic to g2,
// so the result is non-Hamiltonian.
TwoDigraph construct_unique_route_splice(const TwoDigraph& g1, const TwoDigraph& g2,
                                         int cap = kDefaultAcCap);

// Membership in the minimally closed / connected / clean six-arc family.
bool in_family_c6(const TwoDigraph& g, int cap = kDefaultAcCap);

// For members of that family: every AC must touch at least four saturated
// vertices and the graph at least 2m overall.
bool check_saturation_bound(const TwoDigraph& g, int cap = kDefaultAcCap);

// Seed-deterministic random gluing of m clean ACs of length 2k under a
// uniform random perfect matching; always a valid 2-dd.
TwoDigraph random_2dd(int m, int k, std::uint64_t seed);

}  // namespace twodd
