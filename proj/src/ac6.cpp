#include "twodd/ac6.hpp"

#include "twodd/factors.hpp"

namespace twodd {

const char* to_string(Ac6Name n) {
  switch (n) {
    case Ac6Name::XClean: return "X_clean";
    case Ac6Name::X1L: return "X_1L";
    case Ac6Name::X1S: return "X_1S";
    case Ac6Name::X2L: return "X_2L";
    case Ac6Name::X2S: return "X_2S";
    case Ac6Name::Xc2L: return "Xc_2L";
    case Ac6Name::Xc1L1S: return "Xc_1L1S";
    case Ac6Name::Xc2L1S: return "Xc_2L1S";
    case Ac6Name::Xc3L: return "Xc_3L";
    case Ac6Name::Xc3S: return "Xc_3S";
  }
  return "?";
}

Ac6Name ac6_name_from_string(const std::string& s) {
  for (Ac6Name n : {Ac6Name::XClean, Ac6Name::X1L, Ac6Name::X1S, Ac6Name::X2L, Ac6Name::X2S,
                    Ac6Name::Xc2L, Ac6Name::Xc1L1S, Ac6Name::Xc2L1S, Ac6Name::Xc3L,
                    Ac6Name::Xc3S})
    if (s == to_string(n)) return n;
  fail(ErrorKind::ParseError, "unknown AC form name: " + s);
}

Ac6Class classify_ac6(const TwoDigraph& g) {
  if (g.arc_count() != 6 || g.ac_count() != 1)
    fail(ErrorKind::NotSixArcs, "classification needs a standalone six-arc AC");
  Ac6Class c;
  c.vertices = g.vertex_count();
  c.loops = g.loop_count();
  c.exit_entry = g.exit_count();
  c.closed = true;
  for (const Factor& f : enumerate_factors(g)) {
    if (f.open()) {
      ++c.open_factors;
      c.closed = false;
    }
  }
  c.open_routes = c.closed ? 0 : static_cast<int>(open_routes(g).size());

  // (vertices, loops) identifies the form, except that (4,2) splits into
  // the open and the closed variant.
  auto pick = [&]() -> Ac6Name {
    switch (c.vertices * 10 + c.loops) {
      case 60: return Ac6Name::XClean;
      case 51: return Ac6Name::X1L;
      case 50: return Ac6Name::X1S;
      case 42: return c.closed ? Ac6Name::Xc2L : Ac6Name::X2L;
      case 40: return Ac6Name::X2S;
      case 41: return Ac6Name::Xc1L1S;
      case 32: return Ac6Name::Xc2L1S;
      case 33: return Ac6Name::Xc3L;
      case 30: return Ac6Name::Xc3S;
    }
    fail(ErrorKind::NotSixArcs, "six-arc AC does not match any of the ten forms");
  };
  c.name = pick();
  return c;
}

Ac6Class classify_ac6(const TwoDigraph& g, int ac_index) {
  return classify_ac6(induced_subgraph(g, {ac_index}));
}

}  // namespace twodd
