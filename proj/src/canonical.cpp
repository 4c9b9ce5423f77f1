#include "twodd/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

namespace twodd {

namespace {

// Iterated neighbourhood refinement.  Colors are isomorphism-invariant:
// each round's signatures are ranked in sorted order, so two isomorphic
// graphs end up with identical color histograms and per-vertex colors up
// to isomorphism.
std::vector<int> refine_colors(const TwoDigraph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  {
    std::vector<std::tuple<int, int, int>> init(n);  // (kind, loops, 0)
    for (int i = 0; i < n; ++i) {
      VertexId v = g.vertices()[i];
      int loops = 0;
      for (ArcId a : g.out_arcs(v))
        if (g.arc(a).loop()) ++loops;
      init[i] = {static_cast<int>(g.kind(v)), loops, 0};
    }
    std::vector<std::tuple<int, int, int>> sorted = init;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < n; ++i)
      color[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), init[i]) - sorted.begin());
  }
  std::map<VertexId, int> pos;
  for (int i = 0; i < n; ++i) pos[g.vertices()[i]] = i;

  while (true) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (int i = 0; i < n; ++i) {
      VertexId v = g.vertices()[i];
      std::vector<int> ins, outs;
      for (ArcId a : g.in_arcs(v)) ins.push_back(color[pos[g.arc(a).tail]]);
      for (ArcId a : g.out_arcs(v)) outs.push_back(color[pos[g.arc(a).head]]);
      std::sort(ins.begin(), ins.end());
      std::sort(outs.begin(), outs.end());
      sig[i] = {color[i], std::move(ins), std::move(outs)};
    }
    std::vector<Sig> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i)
      next[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct CanonSearch {
  int n;
  std::vector<std::vector<int>> adj;   // arc multiplicities by vertex index
  std::vector<std::vector<int>> slot;  // candidate vertex indices per class, class-ordered
  std::vector<int> order;              // canonical position -> vertex index
  std::vector<bool> used;
  std::vector<int> best;  // staircase encoding of the best ordering
  std::vector<int> cur;
  bool have_best = false;
  long long nodes = 0;

  // Staircase growth when vertex at position p is fixed: column p then row p.
  void extend(std::vector<int>& enc, int p) {
    for (int i = 0; i <= p; ++i) enc.push_back(adj[order[i]][order[p]]);
    for (int i = 0; i < p; ++i) enc.push_back(adj[order[p]][order[i]]);
  }

  void search(int p) {
    if (++nodes > 20'000'000)
      fail(ErrorKind::CapExceeded, "canonical-form search exceeded its node budget");
    if (p == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    // Which class supplies position p: classes are concatenated in order.
    int seen = 0, cls = 0;
    for (; cls < static_cast<int>(slot.size()); ++cls) {
      if (p < seen + static_cast<int>(slot[cls].size())) break;
      seen += static_cast<int>(slot[cls].size());
    }
    size_t mark = cur.size();
    for (int v : slot[cls]) {
      if (used[v]) continue;
      used[v] = true;
      order[p] = v;
      extend(cur, p);
      // Prune only when the whole current prefix already exceeds the
      // incumbent; a strictly smaller earlier position keeps the branch
      // alive regardless of later entries.
      bool viable = true;
      if (have_best) {
        for (size_t i = 0; i < cur.size(); ++i) {
          if (cur[i] < best[i]) break;
          if (cur[i] > best[i]) {
            viable = false;
            break;
          }
        }
      }
      if (viable) search(p + 1);
      cur.resize(mark);
      used[v] = false;
    }
  }
};

}  // namespace

std::vector<std::array<int, 2>> canonical_encoding(const TwoDigraph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<int> color = refine_colors(g);
  CanonSearch s;
  s.n = n;
  s.adj.assign(n, std::vector<int>(n, 0));
  std::map<VertexId, int> pos;
  for (int i = 0; i < n; ++i) pos[g.vertices()[i]] = i;
  for (const Arc& a : g.arcs()) s.adj[pos[a.tail]][pos[a.head]] += 1;

  int classes = *std::max_element(color.begin(), color.end()) + 1;
  s.slot.assign(classes, {});
  for (int i = 0; i < n; ++i) s.slot[color[i]].push_back(i);
  s.order.assign(n, -1);
  s.used.assign(n, false);
  s.search(0);

  // The winning matrix is recoverable from the staircase encoding alone.
  std::vector<std::array<int, 2>> enc;
  int idx = 0;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int p = 0; p < n; ++p) {
    for (int i = 0; i <= p; ++i) m[i][p] = s.best[idx++];
    for (int i = 0; i < p; ++i) m[p][i] = s.best[idx++];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < m[i][j]; ++c) enc.push_back({i, j});
  std::sort(enc.begin(), enc.end());
  return enc;
}

bool isomorphic(const TwoDigraph& a, const TwoDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  if (a.entry_count() != b.entry_count() || a.exit_count() != b.exit_count()) return false;
  if (a.loop_count() != b.loop_count()) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace twodd
