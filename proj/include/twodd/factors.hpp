#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "twodd/graph.hpp"

namespace twodd {

// Factor enumeration walks all 2^|C| selections; this caps |C|.
inline constexpr int kDefaultAcCap = 30;

// One bit per AC in canonical order: 0 selects the forward set, 1 backward.
struct Selection {
  std::uint64_t bits = 0;
  int size = 0;

  static Selection all_forward(int n) { return {0, n}; }
  bool backward(int i) const { return (bits >> i) & 1; }
  Selection complement() const {
    return {size >= 64 ? ~bits : (~bits & ((std::uint64_t{1} << size) - 1)), size};
  }
  bool operator==(const Selection&) const = default;
};

// A factor: the spanning 1-digraph picked by a selection, with its cycle
// and path decomposition.  Cycles and paths are arc-id sequences; cycles
// are listed by smallest contained arc id, paths by start vertex.
struct Factor {
  Selection selection;
  std::vector<ArcId> arcs;  // sorted
  std::vector<std::vector<ArcId>> cycles;
  std::vector<std::vector<ArcId>> paths;

  int index() const { return static_cast<int>(cycles.size()); }
  bool open() const { return cycles.empty(); }
  int component_count() const { return index() + static_cast<int>(paths.size()); }
  // Permutation parity, defined when paths is empty: even iff the vertex
  // count and the index have the same parity.
  bool even(int vertex_count) const { return (vertex_count - index()) % 2 == 0; }
};

Factor factor(const TwoDigraph& g, Selection sel);

// Calls fn for each of the 2^|C| factors in selection order (bits as a
// counter); stops early if fn returns false.
void for_each_factor(const TwoDigraph& g, const std::function<bool(const Factor&)>& fn,
                     int cap = kDefaultAcCap);
std::vector<Factor> enumerate_factors(const TwoDigraph& g, int cap = kDefaultAcCap);

int index_of(const TwoDigraph& g, int cap = kDefaultAcCap);

struct HamiltonicityResult {
  bool hamiltonian = false;
  std::optional<Selection> witness;  // a single spanning cycle when hamiltonian
};
// Ground-truth oracle: scans all factors of a 2-dd for a spanning cycle.
HamiltonicityResult is_hamiltonian_bruteforce(const TwoDigraph& g, int cap = kDefaultAcCap);

bool is_open(const TwoDigraph& g, int cap = kDefaultAcCap);
bool is_closed(const TwoDigraph& g, int cap = kDefaultAcCap);

// True iff g is closed and splitting any saturated vertex opens it.
bool is_minimally_closed(const TwoDigraph& g, int cap = kDefaultAcCap);

enum class ParityClass { Odd, Even, Mixed };
const char* to_string(ParityClass p);

bool all_acs_odd(const TwoDigraph& g);

// Index parity over all factors of a 2-dd.  When every AC is odd a single
// factor decides (all factors then share one parity); pass exhaustive to
// force the full scan anyway.
ParityClass parity_class(const TwoDigraph& g, bool exhaustive = false, int cap = kDefaultAcCap);

enum class Parity { Even, Odd };

// Entry-to-exit bijection induced by a factor's paths.  The permutation
// uses the canonical labeling: entries and exits sorted ascending,
// positions 1..n; sign computed from that image array.
struct Route {
  std::vector<std::pair<VertexId, VertexId>> mapping;  // sorted by entry vertex
  bool open = false;
  std::vector<int> permutation;  // 1-based images
  int sign = 1;
  Selection defining_selection;  // first factor (in selection order) with this route

  bool operator==(const Route& o) const { return mapping == o.mapping; }
};

Route route_of(const TwoDigraph& g, const Factor& f);
// Distinct routes of open factors, deduplicated by mapping, ordered by the
// defining selection.
std::vector<Route> open_routes(const TwoDigraph& g, int cap = kDefaultAcCap);

// Sign of a 1-based image array via inversion counting (+1 even, -1 odd).
int permutation_sign(const std::vector<int>& perm);

// For a graph whose ACs are all odd: splits routes into those defined by
// odd-index and even-index factors, verifies the sets are disjoint and each
// has uniform permutation parity, and returns those parities.
struct RouteParityPartition {
  std::optional<Parity> odd_factor_routes;
  std::optional<Parity> even_factor_routes;
};
RouteParityPartition route_parity_partition(const TwoDigraph& g, int cap = kDefaultAcCap);

}  // namespace twodd
