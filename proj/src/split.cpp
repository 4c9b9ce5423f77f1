#include "twodd/split.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>

namespace twodd {

namespace {

std::string set_to_string(const std::vector<VertexId>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

bool is_split_set(const TwoDigraph& g, const std::vector<VertexId>& s) {
  for (VertexId v : s)
    if (g.kind(v) != VertexKind::Saturated)
      fail(ErrorKind::NotSaturated, "vertex " + std::to_string(v) + " is not saturated");
  if (s.empty()) return false;
  int before = component_count(g);
  int after = component_count(split_vertices(g, s).graph);
  return after > before;
}

std::vector<SplitSet> minimal_split_sets(const TwoDigraph& g, int max_size) {
  std::vector<VertexId> sat = g.saturated_vertices();
  max_size = std::min<int>(max_size, static_cast<int>(sat.size()));
  std::vector<SplitSet> found;
  std::vector<std::vector<VertexId>> known;  // split sets found so far (all minimal)

  std::vector<VertexId> cur;
  auto contains_known = [&](const std::vector<VertexId>& s) {
    for (const auto& k : known)
      if (std::includes(s.begin(), s.end(), k.begin(), k.end())) return true;
    return false;
  };
  // Subsets by increasing size, lexicographic within a size.
  for (int size = 1; size <= max_size; ++size) {
    std::vector<int> pick(size);
    auto rec = [&](auto&& self, int depth, int from) -> void {
      if (depth == size) {
        std::vector<VertexId> s;
        for (int i : pick) s.push_back(sat[i]);
        if (contains_known(s)) return;  // has a smaller split subset, not minimal
        if (!is_split_set(g, s)) return;
        // Inclusion-minimality double check against all proper subsets.
        bool minimal = true;
        for (int omit = 0; omit < size && minimal; ++omit) {
          std::vector<VertexId> sub;
          for (int i = 0; i < size; ++i)
            if (i != omit) sub.push_back(s[i]);
          if (!sub.empty() && is_split_set(g, sub)) minimal = false;
        }
        if (minimal) {
          known.push_back(s);
          found.push_back({s, true});
        }
        return;
      }
      for (int i = from; i < static_cast<int>(sat.size()); ++i) {
        pick[depth] = i;
        self(self, depth + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return found;
}

std::vector<TwoDigraph> split_components(const TwoDigraph& g, const std::vector<VertexId>& s) {
  if (!is_split_set(g, s))
    fail(ErrorKind::NotASplitSet, set_to_string(s) + " is not a split set");
  TwoDigraph h = split_vertices(g, s).graph;
  std::vector<TwoDigraph> out;
  for (const auto& comp : components(h)) {
    std::set<VertexId> in(comp.begin(), comp.end());
    std::vector<Arc> arcs;
    for (const Arc& a : h.arcs())
      if (in.count(a.tail)) arcs.push_back(a);
    out.push_back(TwoDigraph::build(comp, std::move(arcs)));
  }
  return out;
}

std::pair<TwoDigraph, TwoDigraph> splice_pair(const TwoDigraph& g, VertexId u, VertexId v) {
  if (u == v) fail(ErrorKind::NotMinimalPair, "split pair needs two distinct vertices");
  std::vector<VertexId> pair{std::min(u, v), std::max(u, v)};
  u = pair[0], v = pair[1];
  if (!is_split_set(g, pair))
    fail(ErrorKind::NotMinimalPair, set_to_string(pair) + " is not a split set");
  if (is_split_set(g, {u}) || is_split_set(g, {v}))
    fail(ErrorKind::NotMinimalPair, set_to_string(pair) + " is not minimal");

  MultiSplit ms = split_vertices(g, pair);
  VertexId u_out = ms.halves[0].second, v_out = ms.halves[1].second;
  auto comps = components(ms.graph);
  if (comps.size() != 2)
    fail(ErrorKind::NotMinimalPair,
         "splitting " + set_to_string(pair) + " yields " + std::to_string(comps.size()) +
             " components, expected 2");
  auto in_comp = [&](const std::vector<VertexId>& c, VertexId x) {
    return std::binary_search(c.begin(), c.end(), x);
  };
  // The component with u_in must carry v_out and vice versa.
  const auto& cu = in_comp(comps[0], u) ? comps[0] : comps[1];
  const auto& cv = in_comp(comps[0], u) ? comps[1] : comps[0];
  if (!in_comp(cu, v_out) || !in_comp(cv, u_out) || !in_comp(cv, v))
    fail(ErrorKind::NotMinimalPair, "split halves are not distributed across the components");

  auto piece = [&](const std::vector<VertexId>& comp, VertexId entry, VertexId exit) {
    std::set<VertexId> in(comp.begin(), comp.end());
    std::vector<Arc> arcs;
    for (const Arc& a : ms.graph.arcs())
      if (in.count(a.tail)) arcs.push_back(a);
    return splice(TwoDigraph::build(comp, std::move(arcs)), entry, exit);
  };
  return {piece(cu, v_out, u), piece(cv, u_out, v)};
}

namespace {

struct SplitSearch {
  bool exhaustive = false;
  std::vector<SplitStep> path;
  std::optional<SplitParityWitness> witness;
  std::vector<TwoDigraph> pieces;

  // Smallest (lexicographic) minimal split pair, if any.
  static std::optional<std::pair<VertexId, VertexId>> find_pair(const TwoDigraph& g) {
    std::vector<VertexId> sat = g.saturated_vertices();
    std::vector<bool> singleton(sat.size());
    for (size_t i = 0; i < sat.size(); ++i) singleton[i] = is_split_set(g, {sat[i]});
    for (size_t i = 0; i < sat.size(); ++i) {
      if (singleton[i]) continue;
      for (size_t j = i + 1; j < sat.size(); ++j) {
        if (singleton[j]) continue;
        if (is_split_set(g, {sat[i], sat[j]})) return std::make_pair(sat[i], sat[j]);
      }
    }
    return std::nullopt;
  }

  bool process(const TwoDigraph& piece) {
    // One factor decides the piece's index parity (its ACs are all odd);
    // even index means the piece, and hence the root, is non-Hamiltonian.
    Selection sel = Selection::all_forward(piece.ac_count());
    Factor f = factor(piece, sel);
    if (exhaustive) {
      ParityClass pc = parity_class(piece, /*exhaustive=*/true);
      ParityClass sampled = f.index() % 2 == 0 ? ParityClass::Even : ParityClass::Odd;
      if (pc != sampled)
        fail(ErrorKind::MixedParityFound,
             "single-factor parity disagrees with the exhaustive scan");
    }
    if (f.index() % 2 == 0) {
      witness = SplitParityWitness{path, sel};
      return true;
    }
    auto pr = find_pair(piece);
    if (!pr) {
      pieces.push_back(piece);
      return false;
    }
    auto [g1, g2] = splice_pair(piece, pr->first, pr->second);
    // Fewer ACs first keeps certificates short and deterministic.
    int first = g1.ac_count() <= g2.ac_count() ? 0 : 1;
    for (int round = 0; round < 2; ++round) {
      int child = round == 0 ? first : 1 - first;
      path.push_back({{pr->first, pr->second}, child});
      if (process(child == 0 ? g1 : g2)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

SplitCertifyOutcome certify_by_splitting(const TwoDigraph& g, bool exhaustive) {
  if (!g.saturated()) fail(ErrorKind::NotSaturated, "split certification works on 2-dds");
  if (!all_acs_odd(g))
    fail(ErrorKind::PreconditionViolated, "split certification requires all ACs odd");
  if (!is_connected(g))
    fail(ErrorKind::PreconditionViolated, "split certification requires a connected graph");

  SplitSearch search;
  search.exhaustive = exhaustive;
  SplitCertifyOutcome out;
  if (search.process(g)) {
    Certificate cert;
    cert.verdict = Verdict::NonHamiltonian;
    cert.method = Method::SplitParity;
    cert.witness = *search.witness;
    out.certificate = std::move(cert);
  } else {
    out.pieces = std::move(search.pieces);
  }
  return out;
}

TwoDigraph even_pair_splice(const TwoDigraph& g1, const TwoDigraph& g2, VertexId v1, VertexId v2,
                            int cap) {
  for (const TwoDigraph* g : {&g1, &g2})
    if (!g->saturated() || parity_class(*g, /*exhaustive=*/false, cap) != ParityClass::Even)
      fail(ErrorKind::NotEven, "even_pair_splice needs two even 2-dds");
  if (g1.kind(v1) != VertexKind::Saturated || g2.kind(v2) != VertexKind::Saturated)
    fail(ErrorKind::NotSaturated, "chosen splice vertices must be saturated");

  VertexId shift = 0;
  TwoDigraph u = disjoint_union(g1, g2, &shift);
  MultiSplit ms = split_vertices(u, {v1, v2 + shift});
  // ms.halves: (v1, v1_out), (v2', v2'_out).  Crosswise splices: v1_in with
  // v2_out and v2_in with v1_out.
  VertexId v1_in = ms.halves[0].first, v1_out = ms.halves[0].second;
  VertexId v2_in = ms.halves[1].first, v2_out = ms.halves[1].second;
  TwoDigraph spliced = splice(ms.graph, v2_out, v1_in);
  return splice(spliced, v1_out, v2_in);
}

}  // namespace twodd
