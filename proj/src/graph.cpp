#include "twodd/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace twodd {

void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::DuplicateArcId: return "DuplicateArcId";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownArc: return "UnknownArc";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::NotEntry: return "NotEntry";
    case ErrorKind::NotExit: return "NotExit";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::SelectionLengthMismatch: return "SelectionLengthMismatch";
    case ErrorKind::TooManyAcs: return "TooManyAcs";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::SaturatedGraph: return "SaturatedGraph";
    case ErrorKind::MixedParityFound: return "MixedParityFound";
    case ErrorKind::NotASplitSet: return "NotASplitSet";
    case ErrorKind::NotMinimalPair: return "NotMinimalPair";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::RouteNotOpen: return "RouteNotOpen";
    case ErrorKind::KNotProper: return "KNotProper";
    case ErrorKind::NotSixArcs: return "NotSixArcs";
    case ErrorKind::NotFamilyF6: return "NotFamilyF6";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::RouteNotUnique: return "RouteNotUnique";
    case ErrorKind::NotNonHamiltonian: return "NotNonHamiltonian";
    case ErrorKind::NotInC6: return "NotInC6";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Entry: return "entry";
    case VertexKind::Exit: return "exit";
    case VertexKind::Saturated: return "saturated";
  }
  return "?";
}

std::vector<ArcId> AlternatingCycle::forward() const {
  std::vector<ArcId> out;
  for (size_t i = 0; i < arcs.size(); i += 2) out.push_back(arcs[i]);
  return out;
}

std::vector<ArcId> AlternatingCycle::backward() const {
  std::vector<ArcId> out;
  for (size_t i = 1; i < arcs.size(); i += 2) out.push_back(arcs[i]);
  return out;
}

int TwoDigraph::vi(VertexId v) const {
  auto it = vidx_.find(v);
  if (it == vidx_.end()) fail(ErrorKind::UnknownVertex, "unknown vertex " + std::to_string(v));
  return it->second;
}

const Arc& TwoDigraph::arc(ArcId a) const {
  auto it = aidx_.find(a);
  if (it == aidx_.end()) fail(ErrorKind::UnknownArc, "unknown arc " + std::to_string(a));
  return arcs_[it->second];
}

VertexKind TwoDigraph::kind(VertexId v) const { return kind_[vi(v)]; }

const std::vector<ArcId>& TwoDigraph::in_arcs(VertexId v) const { return in_[vi(v)]; }
const std::vector<ArcId>& TwoDigraph::out_arcs(VertexId v) const { return out_[vi(v)]; }

std::vector<VertexId> TwoDigraph::entries() const {
  std::vector<VertexId> out;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (kind_[i] == VertexKind::Entry) out.push_back(verts_[i]);
  return out;
}

std::vector<VertexId> TwoDigraph::exits() const {
  std::vector<VertexId> out;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (kind_[i] == VertexKind::Exit) out.push_back(verts_[i]);
  return out;
}

std::vector<VertexId> TwoDigraph::saturated_vertices() const {
  std::vector<VertexId> out;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (kind_[i] == VertexKind::Saturated) out.push_back(verts_[i]);
  return out;
}

int TwoDigraph::loop_count() const {
  int n = 0;
  for (const Arc& a : arcs_)
    if (a.loop()) ++n;
  return n;
}

int TwoDigraph::ac_of_arc(ArcId a) const {
  auto it = arc_pos_.find(a);
  if (it == arc_pos_.end()) fail(ErrorKind::UnknownArc, "unknown arc " + std::to_string(a));
  return it->second.first;
}

bool TwoDigraph::forward_in_ac(ArcId a) const {
  auto it = arc_pos_.find(a);
  if (it == arc_pos_.end()) fail(ErrorKind::UnknownArc, "unknown arc " + std::to_string(a));
  return it->second.second % 2 == 0;
}

VertexId TwoDigraph::max_vertex_label() const {
  VertexId m = -1;
  for (VertexId v : verts_) m = std::max(m, v);
  return m;
}

ArcId TwoDigraph::max_arc_id() const {
  ArcId m = -1;
  for (const Arc& a : arcs_) m = std::max(m, a.id);
  return m;
}

bool TwoDigraph::operator==(const TwoDigraph& o) const {
  return verts_ == o.verts_ && arcs_ == o.arcs_;
}

TwoDigraph TwoDigraph::build(std::vector<Arc> arcs) {
  std::vector<VertexId> vs;
  for (const Arc& a : arcs) {
    vs.push_back(a.tail);
    vs.push_back(a.head);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return build(vs, std::move(arcs));
}

TwoDigraph TwoDigraph::build(const std::vector<VertexId>& vertices, std::vector<Arc> arcs) {
  TwoDigraph g;
  g.verts_ = vertices;
  std::sort(g.verts_.begin(), g.verts_.end());
  for (size_t i = 0; i + 1 < g.verts_.size(); ++i)
    if (g.verts_[i] == g.verts_[i + 1])
      fail(ErrorKind::DuplicateVertex, "duplicate vertex " + std::to_string(g.verts_[i]));
  for (size_t i = 0; i < g.verts_.size(); ++i) g.vidx_[g.verts_[i]] = static_cast<int>(i);

  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < arcs.size(); ++i)
    if (arcs[i].id == arcs[i + 1].id)
      fail(ErrorKind::DuplicateArcId, "duplicate arc id " + std::to_string(arcs[i].id));
  g.arcs_ = std::move(arcs);
  for (size_t i = 0; i < g.arcs_.size(); ++i) g.aidx_[g.arcs_[i].id] = static_cast<int>(i);

  g.in_.assign(g.verts_.size(), {});
  g.out_.assign(g.verts_.size(), {});
  for (const Arc& a : g.arcs_) {
    if (!g.has_vertex(a.tail) || !g.has_vertex(a.head))
      fail(ErrorKind::DanglingEndpoint,
           "arc " + std::to_string(a.id) + " references an unlisted vertex");
    g.out_[g.vidx_[a.tail]].push_back(a.id);
    g.in_[g.vidx_[a.head]].push_back(a.id);
  }

  g.kind_.resize(g.verts_.size());
  for (size_t i = 0; i < g.verts_.size(); ++i) {
    size_t din = g.in_[i].size(), dout = g.out_[i].size();
    if (din == 0 && dout == 2)
      g.kind_[i] = VertexKind::Entry, ++g.entry_count_;
    else if (din == 2 && dout == 0)
      g.kind_[i] = VertexKind::Exit, ++g.exit_count_;
    else if (din == 2 && dout == 2)
      g.kind_[i] = VertexKind::Saturated;
    else {
      std::ostringstream os;
      os << "vertex " << g.verts_[i] << " has degree (" << din << "," << dout
         << "), expected (0,2), (2,0) or (2,2)";
      fail(ErrorKind::DegreeViolation, os.str());
    }
  }

  // Canonical AC decomposition.  The other in-arc at an arc's head is the
  // next (backward) arc; the other out-arc at a backward arc's tail is the
  // next (forward) arc.  Every head has in-degree 2 and every tail
  // out-degree 2, so the walk never gets stuck and closes at the start.
  auto other = [&](const std::vector<ArcId>& pair, ArcId a) -> ArcId {
    assert(pair.size() == 2);
    return pair[0] == a ? pair[1] : pair[0];
  };
  std::unordered_map<ArcId, bool> used;
  for (const Arc& a : g.arcs_) used[a.id] = false;
  for (const Arc& start : g.arcs_) {
    if (used[start.id]) continue;
    AlternatingCycle ac;
    ArcId cur = start.id;
    bool fwd = true;
    do {
      used[cur] = true;
      g.arc_pos_[cur] = {static_cast<int>(g.acs_.size()), static_cast<int>(ac.arcs.size())};
      ac.arcs.push_back(cur);
      const Arc& c = g.arcs_[g.aidx_[cur]];
      cur = fwd ? other(g.in_[g.vidx_[c.head]], cur) : other(g.out_[g.vidx_[c.tail]], cur);
      fwd = !fwd;
    } while (cur != start.id);
    assert(ac.arcs.size() % 2 == 0);
    g.acs_.push_back(std::move(ac));
  }

  // Internal vertices: both arc pairs of a saturated vertex live in one AC.
  for (size_t i = 0; i < g.verts_.size(); ++i) {
    if (g.kind_[i] != VertexKind::Saturated) continue;
    int ac_in = g.arc_pos_[g.in_[i][0]].first;
    int ac_out = g.arc_pos_[g.out_[i][0]].first;
    assert(ac_in == g.arc_pos_[g.in_[i][1]].first);
    assert(ac_out == g.arc_pos_[g.out_[i][1]].first);
    if (ac_in == ac_out) g.acs_[ac_in].internal_vertices.push_back(g.verts_[i]);
  }
  for (AlternatingCycle& ac : g.acs_)
    std::sort(ac.internal_vertices.begin(), ac.internal_vertices.end());

  return g;
}

const std::vector<AlternatingCycle>& ac_decompose(const TwoDigraph& g) { return g.acs(); }

TwoDigraph split(const TwoDigraph& g, VertexId v) {
  if (g.kind(v) != VertexKind::Saturated)
    fail(ErrorKind::NotSaturated, "vertex " + std::to_string(v) + " is not saturated");
  VertexId fresh = g.max_vertex_label() + 1;
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs)
    if (a.tail == v) a.tail = fresh;  // out-arcs move to v_out; in-arcs stay at v
  std::vector<VertexId> vs = g.vertices();
  vs.push_back(fresh);
  return TwoDigraph::build(vs, std::move(arcs));
}

MultiSplit split_vertices(const TwoDigraph& g, std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  MultiSplit out{g, {}};
  for (VertexId v : vs) {
    VertexId fresh = out.graph.max_vertex_label() + 1;
    out.graph = split(out.graph, v);
    out.halves.emplace_back(v, fresh);
  }
  return out;
}

TwoDigraph splice(const TwoDigraph& g, VertexId entry, VertexId exit) {
  if (g.kind(entry) != VertexKind::Entry)
    fail(ErrorKind::NotEntry, "vertex " + std::to_string(entry) + " is not an entry vertex");
  if (g.kind(exit) != VertexKind::Exit)
    fail(ErrorKind::NotExit, "vertex " + std::to_string(exit) + " is not an exit vertex");
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs)
    if (a.tail == entry) a.tail = exit;
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices())
    if (v != entry) vs.push_back(v);
  return TwoDigraph::build(vs, std::move(arcs));
}

TwoDigraph induced_subgraph(const TwoDigraph& g, const std::vector<int>& ac_indices) {
  if (ac_indices.empty()) fail(ErrorKind::EmptySelection, "empty AC selection");
  std::vector<int> ks = ac_indices;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::vector<Arc> arcs;
  for (int k : ks) {
    if (k < 0 || k >= g.ac_count())
      fail(ErrorKind::UnknownArc, "AC index " + std::to_string(k) + " out of range");
    for (ArcId a : g.acs()[k].arcs) arcs.push_back(g.arc(a));
  }
  return TwoDigraph::build(std::move(arcs));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<VertexId>> components(const TwoDigraph& g) {
  std::unordered_map<VertexId, int> idx;
  for (int i = 0; i < g.vertex_count(); ++i) idx[g.vertices()[i]] = i;
  UnionFind uf(g.vertex_count());
  for (const Arc& a : g.arcs()) uf.unite(idx[a.tail], idx[a.head]);
  std::unordered_map<int, std::vector<VertexId>> groups;
  for (int i = 0; i < g.vertex_count(); ++i) groups[uf.find(i)].push_back(g.vertices()[i]);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

int component_count(const TwoDigraph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const TwoDigraph& g) { return component_count(g) <= 1; }

bool is_strongly_connected(const TwoDigraph& g) {
  if (g.vertex_count() == 0) return true;
  // Tarjan would also do; two BFS passes (forward, reverse) are simpler here.
  auto reach = [&](bool forward) {
    std::unordered_map<VertexId, bool> seen;
    std::vector<VertexId> stack{g.vertices().front()};
    seen[stack.front()] = true;
    size_t count = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++count;
      const auto& outs = forward ? g.out_arcs(v) : g.in_arcs(v);
      for (ArcId a : outs) {
        VertexId w = forward ? g.arc(a).head : g.arc(a).tail;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return count == static_cast<size_t>(g.vertex_count());
  };
  return reach(true) && reach(false);
}

std::pair<int, int> boundary_flow(const TwoDigraph& g, const std::vector<VertexId>& u) {
  std::unordered_map<VertexId, bool> in_u;
  for (VertexId v : u) {
    g.kind(v);  // validates membership
    in_u[v] = true;
  }
  int entering = 0, leaving = 0;
  for (const Arc& a : g.arcs()) {
    bool t = in_u.count(a.tail) != 0, h = in_u.count(a.head) != 0;
    if (!t && h) ++entering;
    if (t && !h) ++leaving;
  }
  return {entering, leaving};
}

TwoDigraph disjoint_union(const TwoDigraph& g1, const TwoDigraph& g2, VertexId* vertex_shift,
                          ArcId* arc_shift) {
  VertexId vs = g1.max_vertex_label() + 1;
  ArcId as = g1.max_arc_id() + 1;
  if (vertex_shift) *vertex_shift = vs;
  if (arc_shift) *arc_shift = as;
  std::vector<Arc> arcs = g1.arcs();
  for (const Arc& a : g2.arcs()) arcs.push_back({a.id + as, a.tail + vs, a.head + vs});
  return TwoDigraph::build(std::move(arcs));
}

}  // namespace twodd
