// Command-line front end: one graph per invocation except enumerate/census.
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "twodd/ac6.hpp"
#include "twodd/canonical.hpp"
#include "twodd/factors.hpp"
#include "twodd/generate.hpp"
#include "twodd/graph.hpp"
#include "twodd/io.hpp"
#include "twodd/quotient.hpp"
#include "twodd/split.hpp"

namespace {

using namespace twodd;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::CapExceeded:
    case ErrorKind::TooManyAcs:
      return 3;
    case ErrorKind::UsageError:
      return 64;
    default:
      return 2;
  }
}

struct Options {
  std::string format = "text";
  int cap = kDefaultAcCap;
  int subset_cap = kDefaultClosedSubsetCap;
  bool exhaustive = false;
  bool full_census = false;
  std::uint64_t seed = 0;
  long long budget = 10'000'000;

  bool json_out() const { return format == "json"; }
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_analyze(const Options& o, const std::string& path) {
  TwoDigraph g = load_file(path);
  json j = graph_summary_json(g);
  j["connected"] = is_connected(g);
  j["strongly_connected"] = is_strongly_connected(g);
  std::ostringstream os;
  os << "vertices: " << g.vertex_count() << "\narcs: " << g.arc_count()
     << "\nacs: " << g.ac_count() << "\nsaturated: " << g.saturated_count()
     << "\nentry: " << g.entry_count() << "\nexit: " << g.exit_count()
     << "\nconnected: " << (is_connected(g) ? "yes" : "no")
     << "\nstrongly_connected: " << (is_strongly_connected(g) ? "yes" : "no") << "\n";
  emit(o, j, os.str());
  return 0;
}

int cmd_decompose(const Options& o, const std::string& path) {
  TwoDigraph g = load_file(path);
  json acs = json::array();
  std::ostringstream os;
  for (int i = 0; i < g.ac_count(); ++i) {
    const AlternatingCycle& ac = g.acs()[i];
    bool closed = is_closed(induced_subgraph(g, {i}));
    acs.push_back({{"index", i},
                   {"arcs", ac.arcs},
                   {"half_length", ac.half_length()},
                   {"parity", ac.odd() ? "odd" : "even"},
                   {"clean", ac.clean()},
                   {"closed", closed}});
    os << "ac " << i << ": " << ac.arcs.size() << " arcs, r=" << ac.half_length() << ", "
       << (ac.odd() ? "odd" : "even") << ", " << (ac.clean() ? "clean" : "dirty") << ", "
       << (closed ? "closed" : "open") << "\n";
  }
  emit(o, {{"acs", acs}}, os.str());
  return 0;
}

int cmd_factors(const Options& o, const std::string& path) {
  TwoDigraph g = load_file(path);
  json out = json::array();
  std::ostringstream os;
  for_each_factor(
      g,
      [&](const Factor& f) {
        out.push_back({{"selection", f.selection.bits},
                       {"index", f.index()},
                       {"cycles", f.cycles.size()},
                       {"paths", f.paths.size()}});
        os << "selection " << f.selection.bits << ": index " << f.index() << ", "
           << f.cycles.size() << " cycle(s), " << f.paths.size() << " path(s)\n";
        return true;
      },
      o.cap);
  emit(o, {{"factors", out}}, os.str());
  return 0;
}

int cmd_index(const Options& o, const std::string& path) {
  TwoDigraph g = load_file(path);
  int idx = index_of(g, o.cap);
  emit(o, {{"index", idx}}, "index: " + std::to_string(idx) + "\n");
  return 0;
}

int cmd_routes(const Options& o, const std::string& path) {
  TwoDigraph g = load_file(path);
  json out = json::array();
  std::ostringstream os;
  for (const Route& r : open_routes(g, o.cap)) {
    json m = json::array();
    os << "route:";
    for (const auto& [a, b] : r.mapping) {
      m.push_back({a, b});
      os << " " << a << "->" << b;
    }
    os << " (permutation " << (r.sign > 0 ? "even" : "odd") << ")\n";
    out.push_back({{"mapping", m}, {"sign", r.sign}});
  }
  emit(o, {{"open_routes", out}}, os.str());
  return 0;
}

int cmd_certify(const Options& o, const std::string& path, const std::string& method) {
  auto t0 = Clock::now();
  TwoDigraph g = load_file(path);
  double parse_ms = ms_since(t0);

  t0 = Clock::now();
  Certificate cert;
  if (method == "auto") {
    cert = certify(g, {o.cap, o.subset_cap, o.exhaustive});
  } else if (method == "split") {
    SplitCertifyOutcome sc = certify_by_splitting(g, o.exhaustive);
    cert = sc.certificate ? *sc.certificate : Certificate{};
  } else if (method == "closed-subset") {
    if (auto k = closed_subset_search(g, o.subset_cap)) {
      cert.verdict = Verdict::NonHamiltonian;
      cert.method = Method::ClosedSubset;
      cert.witness = ClosedSubsetWitness{*k};
    }
  } else {  // brute-force
    HamiltonicityResult r = is_hamiltonian_bruteforce(g, o.cap);
    cert.method = Method::BruteForce;
    if (r.hamiltonian) {
      cert.verdict = Verdict::Hamiltonian;
      cert.witness = FactorWitness{*r.witness};
    } else {
      cert.verdict = Verdict::NonHamiltonian;
      cert.witness = ExhaustionWitness{g.ac_count()};
    }
  }
  double certify_ms = ms_since(t0);

  t0 = Clock::now();
  bool verified = verify_certificate(g, cert);
  double verify_ms = ms_since(t0);
  if (!verified) {
    std::cerr << "internal error: certificate failed re-verification\n";
    return 1;
  }

  Report rep{graph_summary_json(g), cert,
             {{"parse", parse_ms}, {"certify", certify_ms}, {"verify", verify_ms}}};
  emit(o, report_json(rep), report_text(rep));
  return 0;
}

int cmd_quotient(const Options& o, const std::string& path, std::vector<int> k) {
  TwoDigraph g = load_file(path);
  std::vector<Minor> q = quotient(g, k);
  json out = json::array();
  std::ostringstream os;
  os << "quotient size: " << q.size() << "\n";
  for (const Minor& m : q) {
    out.push_back({{"graph", serialize(m.graph)},
                   {"route", [&] {
                      json r = json::array();
                      for (const auto& [a, b] : m.route.mapping) r.push_back({a, b});
                      return r;
                    }()}});
    os << "--- minor via route";
    for (const auto& [a, b] : m.route.mapping) os << " " << a << "->" << b;
    os << "\n" << serialize(m.graph);
  }
  emit(o, {{"minors", out}}, os.str());
  return 0;
}

int cmd_split(const Options& o, const std::string& path, std::vector<int> vertices) {
  TwoDigraph g = load_file(path);
  std::vector<VertexId> s(vertices.begin(), vertices.end());
  if (s.empty()) fail(ErrorKind::UsageError, "split needs --vertices");
  std::vector<TwoDigraph> comps = split_components(g, s);
  json out = json::array();
  std::ostringstream os;
  os << comps.size() << " split component(s)\n";
  for (const TwoDigraph& c : comps) {
    out.push_back(serialize(c));
    os << "---\n" << serialize(c);
  }
  emit(o, {{"components", out}}, os.str());
  return 0;
}

int cmd_classify_ac(const Options& o, const std::string& path) {
  TwoDigraph g = load_file(path);
  json out = json::array();
  std::ostringstream os;
  for (int i = 0; i < g.ac_count(); ++i) {
    Ac6Class c = classify_ac6(g, i);
    out.push_back({{"index", i},
                   {"name", to_string(c.name)},
                   {"vertices", c.vertices},
                   {"loops", c.loops},
                   {"exit_entry", c.exit_entry},
                   {"open_factors", c.open_factors},
                   {"open_routes", c.open_routes},
                   {"closed", c.closed}});
    os << "ac " << i << ": " << to_string(c.name) << " vertices=" << c.vertices
       << " loops=" << c.loops << " exit/entry=" << c.exit_entry << " open_factors="
       << c.open_factors << " routes=" << c.open_routes << " "
       << (c.closed ? "closed" : "open") << "\n";
  }
  emit(o, {{"classes", out}}, os.str());
  return 0;
}

FamilySpec spec_from_flags(int k, int m, bool saturated, bool clean, bool dirty, bool connected) {
  FamilySpec spec;
  spec.k = k;
  spec.m = m;
  spec.saturated = saturated;
  if (clean) spec.clean = true;
  if (dirty) spec.clean = false;
  if (connected) spec.connected = true;
  return spec;
}

int cmd_enumerate(const Options& o, const FamilySpec& spec) {
  EnumerationOptions eo{o.full_census ? (long long)1e18 : o.budget};
  bool first = true;
  enumerate_family(
      spec,
      [&](const TwoDigraph& g) {
        if (!first) std::cout << "\n";
        first = false;
        std::cout << serialize(g);
      },
      eo);
  return 0;
}

int cmd_census(const Options& o, const FamilySpec& spec) {
  EnumerationOptions eo{o.full_census ? (long long)1e18 : o.budget};
  CensusRow row = census(spec, eo);
  json j = {{"k", spec.k},          {"m", spec.m},
            {"total", row.total},   {"connected", row.connected},
            {"clean_odd_nonham", row.clean_odd_nonham},
            {"split_decided", row.split_decided}};
  std::ostringstream os;
  os << "family 2k=" << 2 * spec.k << " m=" << spec.m << (spec.saturated ? " saturated" : "")
     << "\ntotal: " << row.total << "\nconnected: " << row.connected
     << "\nclean_odd_nonham: " << row.clean_odd_nonham
     << "\nsplit_decided: " << row.split_decided << "\n";
  emit(o, j, os.str());
  return 0;
}

int cmd_construct(const Options& o, const std::string& kind, const std::string& path1,
                  const std::string& path2, int v1, int v2) {
  TwoDigraph g1 = load_file(path1), g2 = load_file(path2);
  TwoDigraph out;
  if (kind == "even-pair") {
    if (v1 < 0 || v2 < 0) {
      // Seeded defaults: pick saturated vertices deterministically.
      auto pick = [&](const TwoDigraph& g, std::uint64_t salt) {
        auto sat = g.saturated_vertices();
        return sat[(o.seed + salt) % sat.size()];
      };
      v1 = v1 < 0 ? pick(g1, 0) : v1;
      v2 = v2 < 0 ? pick(g2, 1) : v2;
    }
    out = even_pair_splice(g1, g2, v1, v2, o.cap);
  } else if (kind == "closed-splice") {
    out = construct_closed_splice(g1, g2, o.cap);
  } else {  // unique-route
    out = construct_unique_route_splice(g1, g2, o.cap);
  }
  std::cout << serialize(out);
  return 0;
}

int cmd_export_dot(const Options&, const std::string& path, std::uint64_t highlight_sel,
                   bool have_sel, int highlight_ac) {
  TwoDigraph g = load_file(path);
  std::optional<Factor> f;
  if (have_sel) f = factor(g, {highlight_sel, g.ac_count()});
  std::optional<int> ac;
  if (highlight_ac >= 0) ac = highlight_ac;
  std::cout << export_dot(g, f, ac);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating-cycle analysis of 2-regular digraphs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", opt.cap, "factor enumeration cap (ACs)");
  app.add_option("--subset-cap", opt.subset_cap, "closed-subset search cap (ACs)");
  app.add_flag("--exhaustive", opt.exhaustive, "cross-check parity fast paths exhaustively");
  app.add_flag("--full-census", opt.full_census, "lift the enumeration budget");
  app.add_option("--seed", opt.seed, "seed for seeded choices");
  app.add_option("--budget", opt.budget, "enumeration budget (candidate gluings)");

  std::string file, file2, method = "auto", kind;
  std::vector<int> k_indices, vertices;
  int km = 1, kk = 3, v1 = -1, v2 = -1, highlight_ac = -1;
  bool saturated = false, clean = false, dirty = false, connected = false, have_sel = false;
  std::uint64_t highlight_sel = 0;

  // Global flags may appear after the subcommand as well.
  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  auto* analyze = sub("analyze", "graph summary");
  analyze->add_option("file", file)->required();
  auto* decompose = sub("decompose", "list alternating cycles");
  decompose->add_option("file", file)->required();
  auto* factors = sub("factors", "enumerate factors");
  factors->add_option("file", file)->required();
  auto* index = sub("index", "minimum factor index");
  index->add_option("file", file)->required();
  auto* routes = sub("routes", "open routes");
  routes->add_option("file", file)->required();
  auto* certify = sub("certify", "Hamiltonicity certificate");
  certify->add_option("file", file)->required();
  certify->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "split", "closed-subset", "brute-force"}));
  auto* quotient_cmd = sub("quotient", "K-quotient minors");
  quotient_cmd->add_option("file", file)->required();
  quotient_cmd->add_option("--k", k_indices, "AC indices of K")->required();
  auto* split_cmd = sub("split", "split vertices into components");
  split_cmd->add_option("file", file)->required();
  split_cmd->add_option("--vertices", vertices, "vertices to split")->required();
  auto* classify = sub("classify-ac", "classify six-arc ACs");
  classify->add_option("file", file)->required();
  auto* enumerate_cmd = sub("enumerate", "enumerate a family");
  enumerate_cmd->add_option("--k", kk, "half-length of each AC");
  enumerate_cmd->add_option("--m", km, "AC count");
  enumerate_cmd->add_flag("--saturated", saturated);
  enumerate_cmd->add_flag("--clean", clean);
  enumerate_cmd->add_flag("--dirty", dirty);
  enumerate_cmd->add_flag("--connected", connected);
  auto* census_cmd = sub("census", "family counts");
  census_cmd->add_option("--k", kk);
  census_cmd->add_option("--m", km);
  census_cmd->add_flag("--saturated", saturated);
  auto* construct = sub("construct", "non-Hamiltonian constructions");
  construct->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"even-pair", "closed-splice", "unique-route"}));
  construct->add_option("file1", file)->required();
  construct->add_option("file2", file2)->required();
  construct->add_option("--v1", v1);
  construct->add_option("--v2", v2);
  auto* export_dot_cmd = sub("export-dot", "graphviz export");
  export_dot_cmd->add_option("file", file)->required();
  export_dot_cmd->add_option("--highlight-factor", highlight_sel)
      ->each([&](const std::string&) { have_sel = true; });
  export_dot_cmd->add_option("--highlight-ac", highlight_ac);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (*analyze) return cmd_analyze(opt, file);
    if (*decompose) return cmd_decompose(opt, file);
    if (*factors) return cmd_factors(opt, file);
    if (*index) return cmd_index(opt, file);
    if (*routes) return cmd_routes(opt, file);
    if (*certify) return cmd_certify(opt, file, method);
    if (*quotient_cmd) return cmd_quotient(opt, file, k_indices);
    if (*split_cmd) return cmd_split(opt, file, vertices);
    if (*classify) return cmd_classify_ac(opt, file);
    if (*enumerate_cmd)
      return cmd_enumerate(opt, spec_from_flags(kk, km, saturated, clean, dirty, connected));
    if (*census_cmd)
      return cmd_census(opt, spec_from_flags(kk, km, saturated, false, false, false));
    if (*construct) return cmd_construct(opt, kind, file, file2, v1, v2);
    if (*export_dot_cmd) return cmd_export_dot(opt, file, highlight_sel, have_sel, highlight_ac);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 64;
}
