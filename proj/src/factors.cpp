#include "twodd/factors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace twodd {

const char* to_string(ParityClass p) {
  switch (p) {
    case ParityClass::Odd: return "odd";
    case ParityClass::Even: return "even";
    case ParityClass::Mixed: return "mixed";
  }
  return "?";
}

Factor factor(const TwoDigraph& g, Selection sel) {
  if (sel.size != g.ac_count())
    fail(ErrorKind::SelectionLengthMismatch,
         "selection has " + std::to_string(sel.size) + " bits, graph has " +
             std::to_string(g.ac_count()) + " ACs");
  Factor f;
  f.selection = sel;
  for (int i = 0; i < g.ac_count(); ++i) {
    const AlternatingCycle& ac = g.acs()[i];
    auto half = sel.backward(i) ? ac.backward() : ac.forward();
    f.arcs.insert(f.arcs.end(), half.begin(), half.end());
  }
  std::sort(f.arcs.begin(), f.arcs.end());

  // Each vertex has at most one outgoing factor arc; follow successors.
  std::unordered_map<VertexId, ArcId> next;
  for (ArcId a : f.arcs) next[g.arc(a).tail] = a;

  std::unordered_map<ArcId, bool> used;
  for (ArcId a : f.arcs) used[a] = false;

  // Paths start at entry vertices, in label order.
  for (VertexId v : g.entries()) {
    std::vector<ArcId> path;
    VertexId cur = v;
    while (true) {
      auto it = next.find(cur);
      if (it == next.end()) break;
      path.push_back(it->second);
      used[it->second] = true;
      cur = g.arc(it->second).head;
    }
    assert(!path.empty());
    f.paths.push_back(std::move(path));
  }

  // Remaining arcs lie on cycles; start each at its smallest arc id.
  for (ArcId a : f.arcs) {
    if (used[a]) continue;
    std::vector<ArcId> cycle;
    ArcId cur = a;
    do {
      cycle.push_back(cur);
      used[cur] = true;
      cur = next.at(g.arc(cur).head);
    } while (cur != a);
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

void for_each_factor(const TwoDigraph& g, const std::function<bool(const Factor&)>& fn, int cap) {
  int m = g.ac_count();
  if (m > cap || m > 62)
    fail(ErrorKind::TooManyAcs,
         "graph has " + std::to_string(m) + " ACs, cap is " + std::to_string(std::min(cap, 62)));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
    if (!fn(factor(g, {bits, m}))) return;
}

std::vector<Factor> enumerate_factors(const TwoDigraph& g, int cap) {
  std::vector<Factor> out;
  for_each_factor(
      g,
      [&](const Factor& f) {
        out.push_back(f);
        return true;
      },
      cap);
  return out;
}

int index_of(const TwoDigraph& g, int cap) {
  int best = -1;
  for_each_factor(
      g,
      [&](const Factor& f) {
        if (best < 0 || f.index() < best) best = f.index();
        return best != 0;
      },
      cap);
  return best;
}

HamiltonicityResult is_hamiltonian_bruteforce(const TwoDigraph& g, int cap) {
  if (!g.saturated()) fail(ErrorKind::NotSaturated, "hamiltonicity is asked of 2-dds only");
  HamiltonicityResult res;
  for_each_factor(
      g,
      [&](const Factor& f) {
        if (f.index() == 1 &&
            static_cast<int>(f.cycles.front().size()) == g.vertex_count()) {
          res.hamiltonian = true;
          res.witness = f.selection;
          return false;
        }
        return true;
      },
      cap);
  return res;
}

bool is_open(const TwoDigraph& g, int cap) {
  bool open = false;
  for_each_factor(
      g,
      [&](const Factor& f) {
        if (f.open()) {
          open = true;
          return false;
        }
        return true;
      },
      cap);
  return open;
}

bool is_closed(const TwoDigraph& g, int cap) { return !is_open(g, cap); }

bool is_minimally_closed(const TwoDigraph& g, int cap) {
  if (!is_closed(g, cap)) fail(ErrorKind::NotClosed, "graph is open");
  for (VertexId v : g.saturated_vertices())
    if (is_closed(split(g, v), cap)) return false;
  return true;
}

bool all_acs_odd(const TwoDigraph& g) {
  for (const AlternatingCycle& ac : g.acs())
    if (!ac.odd()) return false;
  return true;
}

ParityClass parity_class(const TwoDigraph& g, bool exhaustive, int cap) {
  if (!g.saturated()) fail(ErrorKind::NotSaturated, "parity class is defined for 2-dds");
  if (!exhaustive && all_acs_odd(g)) {
    Factor f = factor(g, Selection::all_forward(g.ac_count()));
    return f.index() % 2 == 0 ? ParityClass::Even : ParityClass::Odd;
  }
  bool saw_even = false, saw_odd = false;
  for_each_factor(
      g,
      [&](const Factor& f) {
        (f.index() % 2 == 0 ? saw_even : saw_odd) = true;
        return !(saw_even && saw_odd);
      },
      cap);
  if (saw_even && saw_odd) return ParityClass::Mixed;
  return saw_even ? ParityClass::Even : ParityClass::Odd;
}

int permutation_sign(const std::vector<int>& perm) {
  // Inversion count by insertion; sizes here are small.
  long long inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Route route_of(const TwoDigraph& g, const Factor& f) {
  std::vector<VertexId> entries = g.entries(), exits = g.exits();
  if (entries.empty()) fail(ErrorKind::SaturatedGraph, "no routes: graph has no entry vertices");
  Route r;
  r.open = f.open();
  r.defining_selection = f.selection;
  std::map<VertexId, VertexId> map;
  for (const auto& path : f.paths) {
    VertexId from = g.arc(path.front()).tail;
    VertexId to = g.arc(path.back()).head;
    map[from] = to;
  }
  assert(map.size() == entries.size());
  for (VertexId v : entries) r.mapping.emplace_back(v, map.at(v));
  std::unordered_map<VertexId, int> exit_pos;
  for (size_t i = 0; i < exits.size(); ++i) exit_pos[exits[i]] = static_cast<int>(i) + 1;
  for (const auto& [from, to] : r.mapping) r.permutation.push_back(exit_pos.at(to));
  r.sign = permutation_sign(r.permutation);
  return r;
}

std::vector<Route> open_routes(const TwoDigraph& g, int cap) {
  if (g.entries().empty()) fail(ErrorKind::SaturatedGraph, "no routes: graph is saturated");
  std::vector<Route> out;
  std::set<std::vector<std::pair<VertexId, VertexId>>> seen;
  for_each_factor(
      g,
      [&](const Factor& f) {
        if (!f.open()) return true;
        Route r = route_of(g, f);
        if (seen.insert(r.mapping).second) out.push_back(std::move(r));
        return true;
      },
      cap);
  return out;
}

RouteParityPartition route_parity_partition(const TwoDigraph& g, int cap) {
  if (!all_acs_odd(g))
    fail(ErrorKind::PreconditionViolated, "route parity partition requires all ACs odd");
  if (g.entries().empty()) fail(ErrorKind::SaturatedGraph, "graph has no entry vertices");

  // route mapping -> (factor index parity, permutation sign)
  std::map<std::vector<std::pair<VertexId, VertexId>>, std::pair<int, int>> seen;
  RouteParityPartition part;
  std::optional<int> odd_sign, even_sign;
  for_each_factor(
      g,
      [&](const Factor& f) {
        Route r = route_of(g, f);
        int fp = f.index() % 2;
        auto [it, inserted] = seen.emplace(r.mapping, std::make_pair(fp, r.sign));
        if (!inserted && it->second.first != fp)
          fail(ErrorKind::MixedParityFound, "a route arises from factors of both index parities");
        auto& slot = fp == 1 ? odd_sign : even_sign;
        if (!slot)
          slot = r.sign;
        else if (*slot != r.sign)
          fail(ErrorKind::MixedParityFound,
               std::string("routes of ") + (fp == 1 ? "odd" : "even") +
                   "-index factors have mixed permutation parity");
        return true;
      },
      cap);
  if (odd_sign) part.odd_factor_routes = *odd_sign == 1 ? Parity::Even : Parity::Odd;
  if (even_sign) part.even_factor_routes = *even_sign == 1 ? Parity::Even : Parity::Odd;
  return part;
}

}  // namespace twodd
