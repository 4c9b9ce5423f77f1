#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twodd/error.hpp"

namespace twodd {

using VertexId = int;
using ArcId = int;

// Arcs are entities with identity: loops (tail == head) and parallel arcs
// are both legal, so an arc cannot be represented by its endpoint pair.
struct Arc {
  ArcId id;
  VertexId tail;
  VertexId head;

  bool loop() const { return tail == head; }
  bool operator==(const Arc&) const = default;
};

enum class VertexKind { Entry, Exit, Saturated };

const char* to_string(VertexKind k);

// A maximal alternating sequence of arcs (e0 .. e_{2r-1}): consecutive arcs
// share their head at even index and their tail at odd index, cyclically.
// Arcs at even positions form the forward set, odd positions the backward
// set; the split is anchored to the starting arc (the lowest arc id of the
// cycle, traversed in its own direction).
struct AlternatingCycle {
  std::vector<ArcId> arcs;
  std::vector<VertexId> internal_vertices;  // sorted; saturated with all four slots here

  int half_length() const { return static_cast<int>(arcs.size()) / 2; }
  bool odd() const { return half_length() % 2 == 1; }
  bool clean() const { return internal_vertices.empty(); }
  std::vector<ArcId> forward() const;
  std::vector<ArcId> backward() const;
};

// Immutable 2-digraph: every vertex has degree pattern (0,2), (2,0) or
// (2,2).  The alternating-cycle decomposition is computed once at build
// time and is canonical: every AC starts at its lowest arc id traversed
// forward and ACs are ordered by that id.
class TwoDigraph {
 public:
  TwoDigraph() = default;

  // Validates degrees and endpoint references, then decomposes into ACs.
  static TwoDigraph build(const std::vector<VertexId>& vertices, std::vector<Arc> arcs);
  // Convenience: vertex set implied by arc endpoints.
  static TwoDigraph build(std::vector<Arc> arcs);

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int ac_count() const { return static_cast<int>(acs_.size()); }

  const std::vector<VertexId>& vertices() const { return verts_; }  // sorted
  const std::vector<Arc>& arcs() const { return arcs_; }            // sorted by id
  const std::vector<AlternatingCycle>& acs() const { return acs_; }

  bool has_vertex(VertexId v) const { return vidx_.count(v) != 0; }
  bool has_arc(ArcId a) const { return aidx_.count(a) != 0; }
  const Arc& arc(ArcId a) const;

  VertexKind kind(VertexId v) const;
  bool saturated() const { return entry_count_ == 0 && exit_count_ == 0; }  // 2-dd

  std::vector<VertexId> entries() const;
  std::vector<VertexId> exits() const;
  std::vector<VertexId> saturated_vertices() const;
  int entry_count() const { return entry_count_; }
  int exit_count() const { return exit_count_; }
  int saturated_count() const { return vertex_count() - entry_count_ - exit_count_; }

  // Arc ids incident at v; empty or exactly two entries.
  const std::vector<ArcId>& in_arcs(VertexId v) const;
  const std::vector<ArcId>& out_arcs(VertexId v) const;

  int loop_count() const;
  int ac_of_arc(ArcId a) const;          // index into acs()
  bool forward_in_ac(ArcId a) const;     // even position in its AC
  VertexId max_vertex_label() const;
  ArcId max_arc_id() const;

  // Exact equality: same labels, same arc ids and endpoints.
  bool operator==(const TwoDigraph& o) const;

 private:
  int vi(VertexId v) const;

  std::vector<VertexId> verts_;
  std::vector<Arc> arcs_;
  std::unordered_map<VertexId, int> vidx_;
  std::unordered_map<ArcId, int> aidx_;
  std::vector<std::vector<ArcId>> in_, out_;  // per vertex index
  std::vector<VertexKind> kind_;
  std::vector<AlternatingCycle> acs_;
  std::unordered_map<ArcId, std::pair<int, int>> arc_pos_;  // arc -> (ac index, position)
  int entry_count_ = 0;
  int exit_count_ = 0;
};

// The canonical decomposition (same object stored in the graph).
const std::vector<AlternatingCycle>& ac_decompose(const TwoDigraph& g);

// Replace saturated v by an exit vertex v_in (keeps v's label and its two
// in-arcs) and an entry vertex v_out (fresh label max+1, the two out-arcs).
TwoDigraph split(const TwoDigraph& g, VertexId v);

// Split several vertices, ascending label order; returns the resulting
// graph plus the (v, v_out) label pairs in that order.
struct MultiSplit {
  TwoDigraph graph;
  std::vector<std::pair<VertexId, VertexId>> halves;  // (v_in = v, v_out)
};
MultiSplit split_vertices(const TwoDigraph& g, std::vector<VertexId> vs);

// Identify entry vertex u with exit vertex v into one saturated vertex.
// The merged vertex keeps the exit vertex's label, which makes
// splice(split(g, v)) reproduce g exactly.
TwoDigraph splice(const TwoDigraph& g, VertexId entry, VertexId exit);

// Subgraph induced by a set of AC indices: exactly their arcs and endpoints.
TwoDigraph induced_subgraph(const TwoDigraph& g, const std::vector<int>& ac_indices);

// Weak components of the underlying undirected graph, each sorted, ordered
// by smallest member.
std::vector<std::vector<VertexId>> components(const TwoDigraph& g);
int component_count(const TwoDigraph& g);
bool is_connected(const TwoDigraph& g);
bool is_strongly_connected(const TwoDigraph& g);

// Arcs entering / leaving U from outside; loops and internal arcs count in
// neither.  Equal for every U when g is saturated.
std::pair<int, int> boundary_flow(const TwoDigraph& g, const std::vector<VertexId>& u);

// Relabels g2 above g1's labels and ids; out-parameters receive the shifts.
TwoDigraph disjoint_union(const TwoDigraph& g1, const TwoDigraph& g2,
                          VertexId* vertex_shift = nullptr, ArcId* arc_shift = nullptr);

}  // namespace twodd
