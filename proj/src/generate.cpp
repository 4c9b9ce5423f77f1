#include "twodd/generate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <string>

#include "twodd/split.hpp"

namespace twodd {

namespace {

// Slot geometry of m disjoint clean ACs of length 2k.  AC j has entry
// (tail) slots j*k+i and exit (head) slots j*k+i; arc 2i runs T_i -> H_i
// and arc 2i+1 runs T_{i+1} -> H_i, indices mod k.
struct Gluing {
  int m, k;
  int n() const { return m * k; }  // slots per side

  VertexId tail_label(int slot) const {
    int j = slot / k, i = slot % k;
    return j * 2 * k + 2 * i;
  }
  VertexId head_label(int slot) const {
    int j = slot / k, i = slot % k;
    return j * 2 * k + 2 * i + 1;
  }

  // matching[s] = exit slot merged with entry slot s, or -1.
  TwoDigraph build(const std::vector<int>& matching) const {
    std::vector<Arc> arcs;
    arcs.reserve(m * 2 * k);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < k; ++i) {
        int t0 = j * k + i, t1 = j * k + (i + 1) % k, h = j * k + i;
        ArcId base = j * 2 * k + 2 * i;
        auto tail = [&](int slot) {
          // A spliced vertex keeps the exit side's label.
          return matching[slot] >= 0 ? head_label(matching[slot]) : tail_label(slot);
        };
        arcs.push_back({base, tail(t0), head_label(h)});
        arcs.push_back({base + 1, tail(t1), head_label(h)});
      }
    }
    return TwoDigraph::build(std::move(arcs));
  }
};

// Symmetries of the split state: per AC a dihedral element (rotation a,
// optional reflection) and a permutation of the ACs.  Applied to slots:
// entries T_i -> T_{a+i} or T_{a-i}; exits H_i -> H_{a+i} or H_{a-1-i}.
struct GroupElement {
  const std::vector<int>* perm;  // AC permutation
  std::vector<int> rot;          // per source AC
  std::vector<bool> flip;
  int k;

  int entry(int slot) const {
    int j = slot / k, i = slot % k;
    int ni = flip[j] ? (rot[j] - i % k + 2 * k) % k : (rot[j] + i) % k;
    return (*perm)[j] * k + ni;
  }
  int exit(int slot) const {
    int j = slot / k, i = slot % k;
    int ni = flip[j] ? (rot[j] - 1 - i % k + 2 * k) % k : (rot[j] + i) % k;
    return (*perm)[j] * k + ni;
  }
};

// True iff the matching is the lexicographic minimum of its orbit.  The
// scan exits as soon as any group element produces a smaller image, which
// keeps the average cost low.
bool orbit_minimal(const Gluing& g, const std::vector<int>& matching) {
  int n = g.n();
  std::vector<int> perm(g.m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> image(n);
  GroupElement el{&perm, std::vector<int>(g.m, 0), std::vector<bool>(g.m, false), g.k};
  do {
    // Odometer over the per-AC dihedral choices.
    std::fill(el.rot.begin(), el.rot.end(), 0);
    std::fill(el.flip.begin(), el.flip.end(), false);
    while (true) {
      std::fill(image.begin(), image.end(), -1);
      for (int s = 0; s < n; ++s)
        if (matching[s] >= 0) image[el.entry(s)] = el.exit(matching[s]);
      if (std::lexicographical_compare(image.begin(), image.end(), matching.begin(),
                                       matching.end()))
        return false;
      // Advance the odometer.
      int j = 0;
      for (; j < g.m; ++j) {
        if (!el.flip[j]) {
          el.flip[j] = true;
          break;
        }
        el.flip[j] = false;
        if (++el.rot[j] < g.k) break;
        el.rot[j] = 0;
      }
      if (j == g.m) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace

void enumerate_family(const FamilySpec& spec, const std::function<void(const TwoDigraph&)>& fn,
                      const EnumerationOptions& opts) {
  if (spec.k < 1 || spec.m < 1)
    fail(ErrorKind::PreconditionViolated, "family needs k >= 1 and m >= 1");
  if (spec.odd_acs && *spec.odd_acs != (spec.k % 2 == 1)) return;  // empty family

  Gluing g{spec.m, spec.k};
  int n = g.n();
  std::vector<int> matching(n, -1);
  std::vector<bool> exit_used(n, false);
  long long candidates = 0;

  auto emit = [&](const std::vector<int>& mt) {
    if (++candidates > opts.budget)
      fail(ErrorKind::BudgetExceeded, "candidate gluings exceed budget " +
                                          std::to_string(opts.budget) +
                                          "; raise it or use --full-census");
    if (!orbit_minimal(g, mt)) return;
    TwoDigraph built = g.build(mt);
    assert(built.ac_count() == spec.m);
    if (spec.clean) {
      bool clean = true;
      for (const AlternatingCycle& ac : built.acs())
        if (!ac.clean()) clean = false;
      if (clean != *spec.clean) return;
    }
    if (spec.connected && is_connected(built) != *spec.connected) return;
    fn(built);
  };

  // Entry slots decide in order: unmatched, or one of the free exit slots.
  // The clean constraint (no AC may gain an internal vertex) prunes
  // same-AC pairs right here.
  auto rec = [&](auto&& self, int s) -> void {
    if (s == n) {
      emit(matching);
      return;
    }
    if (!spec.saturated) {
      matching[s] = -1;
      self(self, s + 1);
    }
    for (int t = 0; t < n; ++t) {
      if (exit_used[t]) continue;
      if (spec.clean && *spec.clean && t / g.k == s / g.k) continue;
      exit_used[t] = true;
      matching[s] = t;
      self(self, s + 1);
      matching[s] = -1;
      exit_used[t] = false;
    }
  };
  rec(rec, 0);
}

std::vector<TwoDigraph> enumerate_family_vec(const FamilySpec& spec,
                                             const EnumerationOptions& opts) {
  std::vector<TwoDigraph> out;
  enumerate_family(spec, [&](const TwoDigraph& g) { out.push_back(g); }, opts);
  return out;
}

CensusRow census(const FamilySpec& spec, const EnumerationOptions& opts) {
  CensusRow row;
  row.family = spec;
  enumerate_family(
      spec,
      [&](const TwoDigraph& g) {
        ++row.total;
        if (!is_connected(g)) return;
        ++row.connected;
        if (!g.saturated()) return;
        bool clean = true;
        for (const AlternatingCycle& ac : g.acs())
          if (!ac.clean()) clean = false;
        if (!clean) return;
        if (parity_class(g, /*exhaustive=*/!all_acs_odd(g)) != ParityClass::Odd) return;
        if (is_hamiltonian_bruteforce(g).hamiltonian) return;
        ++row.clean_odd_nonham;
        if (all_acs_odd(g) && certify_by_splitting(g).certificate) ++row.split_decided;
      },
      opts);
  return row;
}

TwoDigraph construct_closed_splice(const TwoDigraph& h, const TwoDigraph& g, int cap) {
  if (!is_connected(h) || !is_connected(g))
    fail(ErrorKind::PreconditionViolated, "both inputs must be connected");
  if (!is_closed(h, cap)) fail(ErrorKind::PreconditionViolated, "first input must be closed");
  if (h.entry_count() != g.exit_count() || h.exit_count() != g.entry_count())
    fail(ErrorKind::CountMismatch, "unsaturated vertex counts do not match");

  VertexId shift = 0;
  TwoDigraph u = disjoint_union(h, g, &shift);
  std::vector<VertexId> h_entries = h.entries(), h_exits = h.exits();
  std::vector<VertexId> g_entries = g.entries(), g_exits = g.exits();
  for (size_t i = 0; i < h_entries.size(); ++i) u = splice(u, h_entries[i], g_exits[i] + shift);
  for (size_t i = 0; i < h_exits.size(); ++i) u = splice(u, g_entries[i] + shift, h_exits[i]);
  assert(u.saturated());
  return u;
}

TwoDigraph construct_unique_route_splice(const TwoDigraph& g1, const TwoDigraph& g2, int cap) {
  if (!is_connected(g1) || !is_connected(g2))
    fail(ErrorKind::PreconditionViolated, "both inputs must be connected");
  if (g1.entry_count() == 0)
    fail(ErrorKind::RouteNotUnique, "first input is saturated and has no routes");
  std::vector<Route> routes = open_routes(g1, cap);
  if (routes.size() != 1)
    fail(ErrorKind::RouteNotUnique,
         "first input has " + std::to_string(routes.size()) + " open routes, need exactly 1");
  if (!g2.saturated()) fail(ErrorKind::NotSaturated, "second input must be a 2-dd");
  if (is_hamiltonian_bruteforce(g2, cap).hamiltonian)
    fail(ErrorKind::NotNonHamiltonian, "second input is Hamiltonian");
  const Route& r = routes.front();
  int n = static_cast<int>(r.mapping.size());
  if (n > g2.vertex_count())
    fail(ErrorKind::CountMismatch, "second input has too few vertices to split");

  VertexId shift = 0;
  TwoDigraph u = disjoint_union(g1, g2, &shift);
  std::vector<VertexId> targets(g2.vertices().begin(), g2.vertices().begin() + n);
  for (VertexId& v : targets) v += shift;
  MultiSplit ms = split_vertices(u, targets);
  TwoDigraph cur = ms.graph;
  for (int i = 0; i < n; ++i) {
    auto [u_entry, u_exit] = r.mapping[i];
    auto [v_in, v_out] = ms.halves[i];
    cur = splice(cur, u_entry, v_in);   // entry of g1 with the in-half
    cur = splice(cur, v_out, u_exit);   // out-half with r(entry)
  }
  assert(cur.saturated());
  return cur;
}

bool in_family_c6(const TwoDigraph& g, int cap) {
  for (const AlternatingCycle& ac : g.acs())
    if (ac.arcs.size() != 6 || !ac.clean()) return false;
  if (!is_connected(g)) return false;
  if (!is_closed(g, cap)) return false;
  return is_minimally_closed(g, cap);
}

bool check_saturation_bound(const TwoDigraph& g, int cap) {
  if (!in_family_c6(g, cap))
    fail(ErrorKind::NotInC6, "graph is not minimally closed, connected and clean with 6-arc ACs");
  if (g.saturated_count() < 2 * g.ac_count()) return false;
  for (const AlternatingCycle& ac : g.acs()) {
    std::set<VertexId> sat;
    for (ArcId a : ac.arcs) {
      const Arc& arc = g.arc(a);
      for (VertexId v : {arc.tail, arc.head})
        if (g.kind(v) == VertexKind::Saturated) sat.insert(v);
    }
    if (static_cast<int>(sat.size()) < 4) return false;
  }
  return true;
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace

TwoDigraph random_2dd(int m, int k, std::uint64_t seed) {
  if (m < 1 || k < 1) fail(ErrorKind::PreconditionViolated, "need m >= 1 and k >= 1");
  Gluing g{m, k};
  int n = g.n();
  std::vector<int> matching(n);
  std::iota(matching.begin(), matching.end(), 0);
  SplitMix64 rng{seed};
  for (int i = n - 1; i > 0; --i) std::swap(matching[i], matching[rng.below(i + 1)]);
  return g.build(matching);
}

}  // namespace twodd
