#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "twodd/generate.hpp"
#include "twodd/quotient.hpp"
#include "twodd/split.hpp"

using namespace twodd;

namespace {

// Doubled directed 4-cycle 0 -> 1 -> 2 -> 3 -> 0: every vertex pair is a
// minimal split set and no singleton is.
TwoDigraph doubled_square() {
  return TwoDigraph::build({{0, 0, 1},
                            {1, 0, 1},
                            {2, 1, 2},
                            {3, 1, 2},
                            {4, 2, 3},
                            {5, 2, 3},
                            {6, 3, 0},
                            {7, 3, 0}});
}

// Two doubled digons joined through one spliced vertex: a 5-vertex chain
// entry 4 -> 3 -> 2 -> 0 -> exit 1 whose saturated vertices are all
// singleton split sets.
TwoDigraph digon_chain() {
  return TwoDigraph::build({{0, 0, 1},
                            {1, 0, 1},
                            {2, 2, 0},
                            {3, 2, 0},
                            {4, 3, 2},
                            {5, 3, 2},
                            {6, 4, 3},
                            {7, 4, 3}});
}

}  // namespace

TEST_CASE("is_split_set: quad6") {
  TwoDigraph g = fixture("quad6");
  CHECK(is_split_set(g, {5, 7}));
  CHECK(!is_split_set(g, {5}));
  CHECK(!is_split_set(g, {}));
  CHECK_THROWS_AS(is_split_set(fixture("x1s"), {3}), Error);  // entry vertex
}

TEST_CASE("minimal_split_sets: quad6 finds exactly {5,7}") {
  std::vector<SplitSet> sets = minimal_split_sets(fixture("quad6"), 2);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].vertices == std::vector<VertexId>{5, 7});
  CHECK(sets[0].minimal);
}

TEST_CASE("minimal_split_sets: doubled square has six even pairs") {
  std::vector<SplitSet> sets = minimal_split_sets(doubled_square(), 4);
  CHECK(sets.size() == 6);
  for (const SplitSet& s : sets) CHECK(s.vertices.size() == 2);
}

TEST_CASE("minimal_split_sets: unsaturated chain has singleton split sets") {
  std::vector<SplitSet> sets = minimal_split_sets(digon_chain(), 4);
  REQUIRE(sets.size() == 3);
  for (const SplitSet& s : sets) CHECK(s.vertices.size() == 1);
}

TEST_CASE("minimal_split_sets: minimally closed graphs have no singleton") {
  for (const SplitSet& s : minimal_split_sets(fixture("xc3s"), 3))
    CHECK(s.vertices.size() > 1);
}

TEST_CASE("split_components: quad6 at {5,7}") {
  TwoDigraph g = fixture("quad6");
  std::vector<TwoDigraph> comps = split_components(g, {5, 7});
  REQUIRE(comps.size() == 2);

  // Split halves: 5 -> (5, 13), 7 -> (7, 14); red/blue side holds 5_out and
  // 7_in, green/magenta side holds 5_in and 7_out.
  std::set<VertexId> a(comps[0].vertices().begin(), comps[0].vertices().end());
  std::set<VertexId> b(comps[1].vertices().begin(), comps[1].vertices().end());
  CHECK(a == std::set<VertexId>{1, 2, 3, 4, 6, 7, 13});
  CHECK(b == std::set<VertexId>{5, 8, 9, 10, 11, 12, 14});

  // Saturated / unsaturated accounting across the split.
  int sat = 0, entry = 0, exit = 0;
  for (const TwoDigraph& c : comps) {
    sat += c.saturated_count();
    entry += c.entry_count();
    exit += c.exit_count();
  }
  CHECK(g.saturated_count() == sat + 2);
  CHECK(g.entry_count() == entry - 2);
  CHECK(g.exit_count() == exit - 2);

  CHECK_THROWS_AS(split_components(g, {5}), Error);
}

TEST_CASE("splice_pair: quad6 yields two even six-vertex 2-dds") {
  auto [p1, p2] = splice_pair(fixture("quad6"), 5, 7);
  for (const TwoDigraph* p : {&p1, &p2}) {
    CHECK(p->vertex_count() == 6);
    CHECK(p->saturated());
    CHECK(p->ac_count() == 2);
    CHECK(parity_class(*p) == ParityClass::Even);
    CHECK(parity_class(*p, /*exhaustive=*/true) == ParityClass::Even);
  }
}

TEST_CASE("splice_pair: digon splits into two double loops") {
  auto [p1, p2] = splice_pair(fixture("digon"), 0, 1);
  for (const TwoDigraph* p : {&p1, &p2}) {
    CHECK(p->vertex_count() == 1);
    CHECK(p->arc_count() == 2);
    CHECK(p->loop_count() == 2);
  }
}

TEST_CASE("splice_pair: rejects singletons and non-splitting pairs") {
  TwoDigraph g = fixture("quad6");
  CHECK_THROWS_AS(splice_pair(g, 5, 5), Error);
  CHECK_THROWS_AS(splice_pair(g, 1, 2), Error);  // not a split set
  TwoDigraph chain = digon_chain();
  CHECK_THROWS_AS(splice_pair(chain, 0, 2), Error);  // singletons split already
}

TEST_CASE("certify_by_splitting: quad6 is decided, digon is not") {
  SplitCertifyOutcome quad6 = certify_by_splitting(fixture("quad6"));
  REQUIRE(quad6.certificate.has_value());
  CHECK(quad6.certificate->verdict == Verdict::NonHamiltonian);
  CHECK(*quad6.certificate->method == Method::SplitParity);
  CHECK(verify_certificate(fixture("quad6"), *quad6.certificate));

  // The exhaustive cross-check agrees with the single-factor fast path.
  SplitCertifyOutcome again = certify_by_splitting(fixture("quad6"), /*exhaustive=*/true);
  REQUIRE(again.certificate.has_value());
  CHECK(again.certificate->verdict == Verdict::NonHamiltonian);

  SplitCertifyOutcome digon = certify_by_splitting(fixture("digon"));
  CHECK(!digon.certificate.has_value());
  CHECK(digon.pieces.size() == 2);  // two odd double-loop pieces
  for (const TwoDigraph& p : digon.pieces) CHECK(parity_class(p) == ParityClass::Odd);
}

TEST_CASE("certify_by_splitting: preconditions") {
  CHECK_THROWS_AS(certify_by_splitting(fixture("xclean")), Error);  // unsaturated
  TwoDigraph even_acs = random_2dd(2, 2, 3);
  CHECK_THROWS_AS(certify_by_splitting(even_acs), Error);  // even ACs
}

TEST_CASE("even_pair_splice: recombining quad6's pieces") {
  auto [p1, p2] = splice_pair(fixture("quad6"), 5, 7);
  TwoDigraph g = even_pair_splice(p1, p2, p1.vertices()[0], p2.vertices()[1]);
  CHECK(g.saturated());
  CHECK(is_connected(g));
  CHECK(parity_class(g) == ParityClass::Odd);
  CHECK(parity_class(g, /*exhaustive=*/true) == ParityClass::Odd);
  CHECK(!is_hamiltonian_bruteforce(g).hamiltonian);

  Certificate cert = certify(g);
  CHECK(cert.verdict == Verdict::NonHamiltonian);
  CHECK(verify_certificate(g, cert));
}

TEST_CASE("even_pair_splice: rejects odd inputs") {
  CHECK_THROWS_AS(even_pair_splice(fixture("digon"), fixture("digon"), 0, 0), Error);
  try {
    even_pair_splice(fixture("digon"), fixture("digon"), 0, 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEven);
  }
}
