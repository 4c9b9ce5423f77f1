#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "twodd/generate.hpp"
#include "twodd/io.hpp"
#include "twodd/quotient.hpp"

using namespace twodd;

TEST_CASE("parse: reference fixtures") {
  TwoDigraph quad6 = fixture("quad6");
  CHECK(quad6.vertex_count() == 12);
  CHECK(quad6.arc_count() == 24);
  CHECK(quad6.ac_count() == 4);

  TwoDigraph ring30 = fixture("ring30");
  CHECK(ring30.vertex_count() == 30);
  CHECK(ring30.arc_count() == 60);
  CHECK(ring30.ac_count() == 2);
}

TEST_CASE("parse: header and syntax errors carry line numbers") {
  CHECK_THROWS_AS(parse("2dd 2\n0 0 0\n1 0 0\n"), Error);
  try {
    parse("2dd 2\n0 0 0\n1 0 0\n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  try {
    parse("2dd 1\n0 0 zero\n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse(""), Error);
  // Build errors pass through with their own kinds.
  try {
    parse("2dd 1\n0 0 1\n1 1 0\n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeViolation);
  }
}

TEST_CASE("parse: comments and blank lines are ignored") {
  TwoDigraph g = parse("# leading comment\n2dd 1\n\n0 0 0 # trailing\n# mid\n1 0 0\n");
  CHECK(g.vertex_count() == 1);
  CHECK(g.arc_count() == 2);
}

TEST_CASE("serialize then parse is the identity, ids preserved") {
  for (const char* name : {"quad6", "ring30", "digon", "xc2l1s"}) {
    TwoDigraph g = fixture(name);
    CHECK(parse(serialize(g)) == g);
  }
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    TwoDigraph g = random_2dd(1 + seed % 4, 1 + seed % 3, seed);
    CHECK(parse(serialize(g)) == g);
  }
}

TEST_CASE("export_dot: X_clean styling") {
  std::string dot = export_dot(fixture("xclean"));
  auto count = [&](const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = dot.find(needle, pos)) != std::string::npos) ++n, ++pos;
    return n;
  };
  CHECK(count("style=solid") == 3);
  CHECK(count("style=dashed") == 3);
  CHECK(count("#e41a1c") == 6);  // one AC, one color
  CHECK(count("shape=circle") == 6);
  CHECK(export_dot(fixture("xclean")) == dot);  // deterministic
}

TEST_CASE("export_dot: ring30 uses two colors, highlights are bold") {
  TwoDigraph ring30 = fixture("ring30");
  std::string dot = export_dot(ring30);
  CHECK(dot.find("#e41a1c") != std::string::npos);
  CHECK(dot.find("#377eb8") != std::string::npos);
  CHECK(dot.find("penwidth") == std::string::npos);

  std::string bold = export_dot(ring30, std::nullopt, 0);
  CHECK(bold.find("penwidth") != std::string::npos);

  Factor f = factor(ring30, Selection::all_forward(2));
  std::string with_factor = export_dot(ring30, f);
  CHECK(with_factor.find("penwidth") != std::string::npos);
}

TEST_CASE("certificate JSON round trip reproduces the verdict") {
  for (const char* name : {"quad6", "ring30", "digon"}) {
    TwoDigraph g = fixture(name);
    Certificate cert = certify(g);
    nlohmann::json j = certificate_json(cert);
    Certificate back = certificate_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.verdict == cert.verdict);
    CHECK(back.method == cert.method);
    CHECK(verify_certificate(g, back));
  }
}

TEST_CASE("report JSON carries the required keys") {
  TwoDigraph g = fixture("quad6");
  Certificate cert = certify(g);
  Report rep{graph_summary_json(g), cert, {{"certify", 1.0}}};
  nlohmann::json j = report_json(rep);
  for (const char* key : {"verdict", "method", "witness", "counts", "timings"})
    CHECK(j.contains(key));
  CHECK(j["verdict"] == "NonHamiltonian");
}
