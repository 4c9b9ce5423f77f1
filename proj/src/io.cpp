#include "twodd/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace twodd {

using nlohmann::json;

TwoDigraph parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!header_seen) {
      std::string magic;
      int version = 0;
      if (!(ls >> magic)) continue;  // blank or comment before header
      if (magic != "2dd" || !(ls >> version) || version != 1)
        fail(ErrorKind::ParseError,
             "line " + std::to_string(lineno) + ": expected header '2dd 1'");
      std::string junk;
      if (ls >> junk)
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": trailing tokens");
      header_seen = true;
      continue;
    }
    long long id, tail, head;
    if (!(ls >> id)) continue;  // blank or comment line
    constexpr long long kMax = std::numeric_limits<int>::max();
    if (!(ls >> tail >> head) || id < 0 || tail < 0 || head < 0 || id > kMax || tail > kMax ||
        head > kMax)
      fail(ErrorKind::ParseError,
           "line " + std::to_string(lineno) + ": expected '<arc_id> <tail> <head>'");
    std::string junk;
    if (ls >> junk)
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": trailing tokens");
    arcs.push_back({static_cast<ArcId>(id), static_cast<VertexId>(tail),
                    static_cast<VertexId>(head)});
  }
  if (!header_seen) fail(ErrorKind::ParseError, "missing header '2dd 1'");
  return TwoDigraph::build(std::move(arcs));
}

TwoDigraph load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

std::string serialize(const TwoDigraph& g) {
  std::ostringstream os;
  os << "2dd 1\n";
  for (const Arc& a : g.arcs()) os << a.id << ' ' << a.tail << ' ' << a.head << '\n';
  return os.str();
}

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
                          "#f781bf", "#17becf", "#666666", "#b2df8a", "#fdbf6f", "#cab2d6"};

}  // namespace

std::string export_dot(const TwoDigraph& g, const std::optional<Factor>& highlight,
                       std::optional<int> highlight_ac) {
  std::ostringstream os;
  os << "digraph twodd {\n";
  for (VertexId v : g.vertices()) {
    os << "  v" << v << " [label=\"" << v << "\", shape=circle";
    if (g.kind(v) != VertexKind::Saturated) os << ", style=bold";
    os << "];\n";
  }
  std::set<ArcId> bold_arcs;
  if (highlight)
    for (ArcId a : highlight->arcs) bold_arcs.insert(a);
  for (const Arc& a : g.arcs()) {
    int ac = g.ac_of_arc(a.id);
    bool forward = g.forward_in_ac(a.id);
    bool bold = bold_arcs.count(a.id) || (highlight_ac && *highlight_ac == ac);
    os << "  v" << a.tail << " -> v" << a.head << " [color=\""
       << kPalette[ac % (sizeof(kPalette) / sizeof(kPalette[0]))] << "\", style="
       << (forward ? "solid" : "dashed");
    if (bold) os << ", penwidth=2.5";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json graph_summary_json(const TwoDigraph& g) {
  json acs = json::array();
  for (int i = 0; i < g.ac_count(); ++i) {
    const AlternatingCycle& ac = g.acs()[i];
    acs.push_back({{"arcs", ac.arcs.size()},
                   {"half_length", ac.half_length()},
                   {"odd", ac.odd()},
                   {"clean", ac.clean()}});
  }
  return {{"vertices", g.vertex_count()},
          {"arcs", g.arc_count()},
          {"acs", g.ac_count()},
          {"entry", g.entry_count()},
          {"exit", g.exit_count()},
          {"saturated", g.saturated_count()},
          {"ac_detail", acs}};
}

namespace {

json selection_json(const Selection& s) { return {{"bits", s.bits}, {"size", s.size}}; }

Selection selection_from_json(const json& j) {
  return {j.at("bits").get<std::uint64_t>(), j.at("size").get<int>()};
}

json mapping_json(const std::vector<std::pair<VertexId, VertexId>>& m) {
  json out = json::array();
  for (const auto& [a, b] : m) out.push_back({a, b});
  return out;
}

std::vector<std::pair<VertexId, VertexId>> mapping_from_json(const json& j) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  return out;
}

}  // namespace

nlohmann::json certificate_json(const Certificate& cert) {
  json j;
  j["verdict"] = to_string(cert.verdict);
  j["method"] = cert.method ? json(to_string(*cert.method)) : json(nullptr);
  json chain = json::array();
  for (const MinorStep& s : cert.chain)
    chain.push_back({{"ac_index", s.ac_index}, {"route", mapping_json(s.route_mapping)}});
  j["chain"] = chain;

  json w;
  if (const auto* f = std::get_if<FactorWitness>(&cert.witness)) {
    w = {{"kind", "factor"}, {"selection", selection_json(f->selection)}};
  } else if (const auto* e = std::get_if<ExhaustionWitness>(&cert.witness)) {
    w = {{"kind", "exhaustion"}, {"ac_count", e->ac_count}};
  } else if (const auto* d = std::get_if<DisconnectedWitness>(&cert.witness)) {
    w = {{"kind", "disconnected"}, {"component", d->component}};
  } else if (const auto* c = std::get_if<ClosedSubsetWitness>(&cert.witness)) {
    w = {{"kind", "closed_subset"}, {"ac_indices", c->ac_indices}};
  } else if (const auto* a = std::get_if<ClosedAc6Witness>(&cert.witness)) {
    w = {{"kind", "closed_ac6"}, {"ac_index", a->ac_index}, {"class", to_string(a->cls)}};
  } else if (const auto* s = std::get_if<SplitParityWitness>(&cert.witness)) {
    json path = json::array();
    for (const SplitStep& st : s->path)
      path.push_back({{"pair", {st.split_pair.first, st.split_pair.second}},
                      {"child", st.child}});
    w = {{"kind", "split_parity"}, {"path", path}, {"selection", selection_json(s->selection)}};
  } else {
    w = {{"kind", "none"}};
  }
  j["witness"] = w;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate cert;
  std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "Hamiltonian")
    cert.verdict = Verdict::Hamiltonian;
  else if (verdict == "NonHamiltonian")
    cert.verdict = Verdict::NonHamiltonian;
  else
    cert.verdict = Verdict::Undecided;

  if (!j.at("method").is_null()) {
    std::string m = j.at("method").get<std::string>();
    for (Method cand : {Method::BruteForce, Method::Disconnected, Method::ClosedSubset,
                        Method::SplitParity, Method::ClosedAc6, Method::DirtyReduction})
      if (m == to_string(cand)) cert.method = cand;
  }
  for (const auto& s : j.at("chain"))
    cert.chain.push_back({s.at("ac_index").get<int>(), mapping_from_json(s.at("route"))});

  const json& w = j.at("witness");
  std::string kind = w.at("kind").get<std::string>();
  if (kind == "factor") {
    cert.witness = FactorWitness{selection_from_json(w.at("selection"))};
  } else if (kind == "exhaustion") {
    cert.witness = ExhaustionWitness{w.at("ac_count").get<int>()};
  } else if (kind == "disconnected") {
    cert.witness = DisconnectedWitness{w.at("component").get<std::vector<VertexId>>()};
  } else if (kind == "closed_subset") {
    cert.witness = ClosedSubsetWitness{w.at("ac_indices").get<std::vector<int>>()};
  } else if (kind == "closed_ac6") {
    cert.witness = ClosedAc6Witness{w.at("ac_index").get<int>(),
                                    ac6_name_from_string(w.at("class").get<std::string>())};
  } else if (kind == "split_parity") {
    SplitParityWitness sw;
    for (const auto& st : w.at("path"))
      sw.path.push_back({{st.at("pair").at(0).get<VertexId>(),
                          st.at("pair").at(1).get<VertexId>()},
                         st.at("child").get<int>()});
    sw.selection = selection_from_json(w.at("selection"));
    cert.witness = sw;
  }
  return cert;
}

nlohmann::json report_json(const Report& r) {
  json timings = json::object();
  for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
  json cert = certificate_json(r.certificate);
  return {{"verdict", cert.at("verdict")},
          {"method", cert.at("method")},
          {"witness", cert.at("witness")},
          {"chain", cert.at("chain")},
          {"counts", r.graph},
          {"timings", timings}};
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  const json& g = r.graph;
  os << "graph: " << g.at("vertices").get<int>() << " vertices, " << g.at("arcs").get<int>()
     << " arcs, " << g.at("acs").get<int>() << " ACs (" << g.at("saturated").get<int>()
     << " saturated, " << g.at("entry").get<int>() << " entry, " << g.at("exit").get<int>()
     << " exit)\n";
  os << "verdict: " << to_string(r.certificate.verdict) << "\n";
  if (r.certificate.method) os << "method: " << to_string(*r.certificate.method) << "\n";
  if (!r.certificate.chain.empty())
    os << "chain: " << r.certificate.chain.size() << " dirty-AC elimination(s)\n";
  os << "witness: " << certificate_json(r.certificate).at("witness").dump() << "\n";
  for (const auto& [stage, ms] : r.timings_ms) os << "time[" << stage << "]: " << ms << " ms\n";
  return os.str();
}

}  // namespace twodd
