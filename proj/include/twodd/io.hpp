#pragma once

#include <optional>
#include <string>

#include "twodd/certificate.hpp"
#include "twodd/factors.hpp"
#include "twodd/graph.hpp"

#include "json.hpp"

namespace twodd {

// Arc-list text format, version 1:
//   2dd 1
//   # comment
//   <arc_id> <tail> <head>
// Vertices are implied by arc endpoints; isolated vertices cannot be
// expressed and are disallowed.
TwoDigraph parse(const std::string& text);
TwoDigraph load_file(const std::string& path);
std::string serialize(const TwoDigraph& g);

// Graphviz export: one color per AC, solid forward arcs, dashed backward.
// An optional factor or AC index is drawn bold.
std::string export_dot(const TwoDigraph& g, const std::optional<Factor>& highlight = std::nullopt,
                       std::optional<int> highlight_ac = std::nullopt);

nlohmann::json graph_summary_json(const TwoDigraph& g);
nlohmann::json certificate_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

// Report emitted by the certify CLI path: graph summary, certificate and
// per-stage timings; verifying the embedded witness reproduces the verdict.
struct Report {
  nlohmann::json graph;
  Certificate certificate;
  std::vector<std::pair<std::string, double>> timings_ms;
};
nlohmann::json report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace twodd
