#include "twodd/quotient.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>

#include "twodd/split.hpp"

namespace twodd {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Hamiltonian: return "Hamiltonian";
    case Verdict::NonHamiltonian: return "NonHamiltonian";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::BruteForce: return "brute_force";
    case Method::Disconnected: return "disconnected";
    case Method::ClosedSubset: return "closed_subset";
    case Method::SplitParity: return "split_parity";
    case Method::ClosedAc6: return "closed_ac6";
    case Method::DirtyReduction: return "dirty_reduction";
  }
  return "?";
}

namespace {

std::vector<int> validated_proper_k(const TwoDigraph& g, const std::vector<int>& k) {
  std::vector<int> ks = k;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.empty()) fail(ErrorKind::KNotProper, "K must be nonempty");
  if (static_cast<int>(ks.size()) >= g.ac_count())
    fail(ErrorKind::KNotProper, "K must be a proper subset of the AC set");
  for (int i : ks)
    if (i < 0 || i >= g.ac_count())
      fail(ErrorKind::KNotProper, "AC index " + std::to_string(i) + " out of range");
  return ks;
}

}  // namespace

Minor minor(const TwoDigraph& g, const std::vector<int>& k, const Route& r) {
  std::vector<int> ks = validated_proper_k(g, k);
  if (!r.open) fail(ErrorKind::RouteNotOpen, "minors are defined by open routes only");

  std::set<ArcId> k_arcs;
  for (int i : ks)
    for (ArcId a : g.acs()[i].arcs) k_arcs.insert(a);

  // Sanity: the route must pair exactly the unsaturated vertices of K's
  // subgraph.
  TwoDigraph sub = induced_subgraph(g, ks);
  {
    std::vector<VertexId> entries = sub.entries();
    if (r.mapping.size() != entries.size())
      fail(ErrorKind::RouteNotOpen, "route does not cover the subgraph's entry vertices");
    for (const auto& [u, v] : r.mapping)
      if (sub.kind(u) != VertexKind::Entry || sub.kind(v) != VertexKind::Exit)
        fail(ErrorKind::RouteNotOpen, "route endpoints are not entry/exit vertices of K");
  }

  // Identify r(u) with u; the merged vertex keeps the entry vertex's label.
  std::map<VertexId, VertexId> relabel;
  for (const auto& [u, v] : r.mapping) relabel[v] = u;
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (k_arcs.count(a.id)) continue;
    Arc b = a;
    if (auto it = relabel.find(b.tail); it != relabel.end()) b.tail = it->second;
    if (auto it = relabel.find(b.head); it != relabel.end()) b.head = it->second;
    arcs.push_back(b);
  }
  // Building from arcs alone drops isolated vertices (including K's
  // saturated interior and any entry/exit pair of g merged to nothing).
  Minor m{TwoDigraph::build(std::move(arcs)), ks, r};
  return m;
}

std::vector<Minor> quotient(const TwoDigraph& g, const std::vector<int>& k) {
  std::vector<int> ks = validated_proper_k(g, k);
  TwoDigraph sub = induced_subgraph(g, ks);
  std::vector<Minor> out;
  if (sub.saturated()) return out;  // every factor closed, no open routes
  for (const Route& r : open_routes(sub)) out.push_back(minor(g, ks, r));
  return out;
}

namespace {

bool in_f6(const TwoDigraph& g) {
  if (!g.saturated()) return false;
  for (const AlternatingCycle& ac : g.acs())
    if (ac.arcs.size() != 6) return false;
  return true;
}

Certificate disconnected_certificate(const TwoDigraph& g, std::vector<MinorStep> chain) {
  Certificate cert;
  cert.verdict = Verdict::NonHamiltonian;
  cert.method = chain.empty() ? Method::Disconnected : Method::DirtyReduction;
  cert.witness = DisconnectedWitness{components(g).front()};
  cert.chain = std::move(chain);
  return cert;
}

}  // namespace

DirtyEliminationResult eliminate_dirty(const TwoDigraph& g) {
  if (!in_f6(g)) fail(ErrorKind::NotFamilyF6, "dirty elimination needs a 2-dd with six-arc ACs");
  DirtyEliminationResult res{std::nullopt, g, {}};
  if (!is_connected(g)) {
    res.certificate = disconnected_certificate(g, {});
    return res;
  }
  while (res.reduced.ac_count() > 1) {
    int target = -1;
    Ac6Class cls{};
    for (int i = 0; i < res.reduced.ac_count(); ++i) {
      if (res.reduced.acs()[i].clean()) continue;
      target = i;
      cls = classify_ac6(res.reduced, i);
      break;
    }
    if (target < 0) break;  // clean
    if (cls.name == Ac6Name::Xc2L || cls.name == Ac6Name::Xc1L1S) {
      Certificate cert;
      cert.verdict = Verdict::NonHamiltonian;
      cert.method = Method::ClosedAc6;
      cert.chain = res.chain;
      cert.witness = ClosedAc6Witness{target, cls.name};
      res.certificate = std::move(cert);
      return res;
    }
    // Open dirty forms have a unique open route, so the quotient is a
    // singleton Hamiltonian-equivalent to the graph.
    std::vector<Route> routes = open_routes(induced_subgraph(res.reduced, {target}));
    assert(routes.size() == 1);
    Minor m = minor(res.reduced, {target}, routes.front());
    res.chain.push_back({target, routes.front().mapping});
    res.reduced = m.graph;
    if (!is_connected(res.reduced)) {
      res.certificate = disconnected_certificate(res.reduced, res.chain);
      return res;
    }
  }
  return res;
}

std::optional<std::vector<int>> closed_subset_search(const TwoDigraph& g, int cap) {
  int m = g.ac_count();
  if (m > cap)
    fail(ErrorKind::CapExceeded,
         "closed-subset search over " + std::to_string(m) + " ACs exceeds cap " +
             std::to_string(cap));
  std::optional<std::vector<int>> found;
  std::vector<int> pick;
  for (int size = 1; size < m && !found; ++size) {
    pick.assign(size, 0);
    auto rec = [&](auto&& self, int depth, int from) -> void {
      if (found) return;
      if (depth == size) {
        if (is_closed(induced_subgraph(g, pick))) found = pick;
        return;
      }
      for (int i = from; i < m; ++i) {
        pick[depth] = i;
        self(self, depth + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return found;
}

Certificate certify(const TwoDigraph& g, const CertifyOptions& opts) {
  if (!g.saturated()) fail(ErrorKind::NotSaturated, "certification is asked of 2-dds");
  if (!is_connected(g)) return disconnected_certificate(g, {});

  TwoDigraph cur = g;
  std::vector<MinorStep> chain;
  bool dirty = false;
  for (const AlternatingCycle& ac : cur.acs())
    if (!ac.clean()) dirty = true;
  if (dirty && in_f6(cur)) {
    DirtyEliminationResult red = eliminate_dirty(cur);
    if (red.certificate) return *red.certificate;
    cur = red.reduced;
    chain = red.chain;
  }

  if (all_acs_odd(cur)) {
    SplitCertifyOutcome sc = certify_by_splitting(cur, opts.exhaustive);
    if (sc.certificate) {
      sc.certificate->chain = chain;
      return *sc.certificate;
    }
  }

  if (cur.ac_count() >= 2 && cur.ac_count() <= opts.closed_subset_cap) {
    if (auto k = closed_subset_search(cur, opts.closed_subset_cap)) {
      Certificate cert;
      cert.verdict = Verdict::NonHamiltonian;
      cert.method = Method::ClosedSubset;
      cert.chain = std::move(chain);
      cert.witness = ClosedSubsetWitness{*k};
      return cert;
    }
  }

  if (cur.ac_count() <= opts.factor_cap) {
    HamiltonicityResult bf = is_hamiltonian_bruteforce(cur, opts.factor_cap);
    Certificate cert;
    cert.chain = std::move(chain);
    cert.method = Method::BruteForce;
    if (bf.hamiltonian) {
      cert.verdict = Verdict::Hamiltonian;
      cert.witness = FactorWitness{*bf.witness};
    } else {
      cert.verdict = Verdict::NonHamiltonian;
      cert.witness = ExhaustionWitness{cur.ac_count()};
    }
    return cert;
  }

  return Certificate{};
}

namespace {

// Replays recorded dirty eliminations; returns nullopt when a step fails
// to re-derive.
std::optional<TwoDigraph> replay_chain(const TwoDigraph& g, const std::vector<MinorStep>& chain) {
  TwoDigraph cur = g;
  for (const MinorStep& step : chain) {
    if (!in_f6(cur) || step.ac_index < 0 || step.ac_index >= cur.ac_count()) return std::nullopt;
    Ac6Class cls = classify_ac6(cur, step.ac_index);
    if (cls.name != Ac6Name::X1L && cls.name != Ac6Name::X1S && cls.name != Ac6Name::X2L &&
        cls.name != Ac6Name::X2S)
      return std::nullopt;
    std::vector<Route> routes = open_routes(induced_subgraph(cur, {step.ac_index}));
    if (routes.size() != 1 || routes.front().mapping != step.route_mapping) return std::nullopt;
    cur = minor(cur, {step.ac_index}, routes.front()).graph;
  }
  return cur;
}

bool verify_impl(const TwoDigraph& g, const Certificate& cert) {
  if (cert.verdict == Verdict::Undecided) return true;
  std::optional<TwoDigraph> replayed = replay_chain(g, cert.chain);
  if (!replayed) return false;
  const TwoDigraph& cur = *replayed;
  if (!cert.method) return false;

  switch (*cert.method) {
    case Method::BruteForce: {
      if (cert.verdict == Verdict::Hamiltonian) {
        const auto* w = std::get_if<FactorWitness>(&cert.witness);
        if (!w) return false;
        Factor f = factor(cur, w->selection);
        return f.index() == 1 &&
               static_cast<int>(f.cycles.front().size()) == cur.vertex_count();
      }
      const auto* w = std::get_if<ExhaustionWitness>(&cert.witness);
      if (!w || w->ac_count != cur.ac_count()) return false;
      return !is_hamiltonian_bruteforce(cur).hamiltonian;
    }
    case Method::Disconnected:
    case Method::DirtyReduction: {
      const auto* w = std::get_if<DisconnectedWitness>(&cert.witness);
      if (!w || w->component.empty() ||
          static_cast<int>(w->component.size()) >= cur.vertex_count())
        return false;
      std::set<VertexId> in(w->component.begin(), w->component.end());
      for (VertexId v : w->component)
        if (!cur.has_vertex(v)) return false;
      for (const Arc& a : cur.arcs())
        if (in.count(a.tail) != in.count(a.head)) return false;
      return true;
    }
    case Method::ClosedSubset: {
      const auto* w = std::get_if<ClosedSubsetWitness>(&cert.witness);
      if (!w) return false;
      if (w->ac_indices.empty() ||
          static_cast<int>(w->ac_indices.size()) >= cur.ac_count())
        return false;
      return is_closed(induced_subgraph(cur, w->ac_indices));
    }
    case Method::ClosedAc6: {
      const auto* w = std::get_if<ClosedAc6Witness>(&cert.witness);
      if (!w || w->ac_index < 0 || w->ac_index >= cur.ac_count()) return false;
      if (w->cls != Ac6Name::Xc2L && w->cls != Ac6Name::Xc1L1S) return false;
      return classify_ac6(cur, w->ac_index).name == w->cls;
    }
    case Method::SplitParity: {
      const auto* w = std::get_if<SplitParityWitness>(&cert.witness);
      if (!w || !cur.saturated() || !all_acs_odd(cur) || !is_connected(cur)) return false;
      TwoDigraph piece = cur;
      for (const SplitStep& step : w->path) {
        auto [a, b] = splice_pair(piece, step.split_pair.first, step.split_pair.second);
        if (step.child != 0 && step.child != 1) return false;
        piece = step.child == 0 ? a : b;
      }
      Factor f = factor(piece, w->selection);
      return f.paths.empty() && f.index() % 2 == 0;
    }
  }
  return false;
}

}  // namespace

bool verify_certificate(const TwoDigraph& g, const Certificate& cert) {
  try {
    return verify_impl(g, cert);
  } catch (const Error&) {
    return false;
  }
}

bool check_complement_closed(const TwoDigraph& g, int cap) {
  bool f6 = true;
  for (const AlternatingCycle& ac : g.acs())
    if (ac.arcs.size() != 6) f6 = false;
  if (!g.saturated() || !f6 || !is_connected(g))
    fail(ErrorKind::PreconditionViolated, "needs a connected 2-dd with six-arc ACs");
  if (parity_class(g, false, cap) != ParityClass::Odd)
    fail(ErrorKind::PreconditionViolated, "graph is not odd");
  if (is_hamiltonian_bruteforce(g, cap).hamiltonian)
    fail(ErrorKind::PreconditionViolated, "graph is Hamiltonian");

  for (int i = 0; i < g.ac_count(); ++i) {
    if (classify_ac6(g, i).closed) continue;  // only open ACs quantified
    std::vector<int> complement;
    for (int j = 0; j < g.ac_count(); ++j)
      if (j != i) complement.push_back(j);
    if (complement.empty()) continue;
    if (!is_closed(induced_subgraph(g, complement), cap)) return false;
  }
  return true;
}

bool verify_reduction_bijection(const TwoDigraph& g, const std::vector<int>& k,
                                const Selection& f_on_k) {
  std::vector<int> ks = validated_proper_k(g, k);
  TwoDigraph sub = induced_subgraph(g, ks);
  Factor f = factor(sub, f_on_k);
  if (!f.open()) fail(ErrorKind::RouteNotOpen, "the factor on K must be open");
  Route r = route_of(sub, f);
  Minor m = minor(g, ks, r);

  // AC index maps via preserved arc ids.
  auto sub_index_of_g = [&](int gi) {
    ArcId a = g.acs()[gi].arcs.front();
    return sub.ac_of_arc(a);
  };
  std::vector<int> complement;
  for (int i = 0; i < g.ac_count(); ++i)
    if (!std::binary_search(ks.begin(), ks.end(), i)) complement.push_back(i);
  if (m.graph.ac_count() != static_cast<int>(complement.size())) return false;
  std::map<int, int> minor_index_of_g;  // g AC index -> minor AC index
  for (int j = 0; j < m.graph.ac_count(); ++j) {
    ArcId a = m.graph.acs()[j].arcs.front();
    minor_index_of_g[g.ac_of_arc(a)] = j;
  }

  std::uint64_t count = std::uint64_t{1} << complement.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    // Factor of the minor.
    Selection sj{0, m.graph.ac_count()};
    for (size_t t = 0; t < complement.size(); ++t)
      if ((bits >> t) & 1) sj.bits |= std::uint64_t{1} << minor_index_of_g[complement[t]];
    Factor j = factor(m.graph, sj);
    // Matching factor of g: agree with f on K, with j elsewhere.
    Selection sg{0, g.ac_count()};
    for (int gi : ks)
      if (f_on_k.backward(sub_index_of_g(gi))) sg.bits |= std::uint64_t{1} << gi;
    for (size_t t = 0; t < complement.size(); ++t)
      if ((bits >> t) & 1) sg.bits |= std::uint64_t{1} << complement[t];
    Factor fj = factor(g, sg);
    if (j.index() != fj.index() || j.component_count() != fj.component_count()) return false;
  }
  return true;
}

}  // namespace twodd
