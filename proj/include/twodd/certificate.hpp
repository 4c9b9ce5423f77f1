#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "twodd/ac6.hpp"
#include "twodd/factors.hpp"
#include "twodd/graph.hpp"

namespace twodd {

enum class Verdict { Hamiltonian, NonHamiltonian, Undecided };
enum class Method { BruteForce, Disconnected, ClosedSubset, SplitParity, ClosedAc6, DirtyReduction };

const char* to_string(Verdict v);
const char* to_string(Method m);

// One dirty-AC elimination: replace the graph by the unique minor of the
// AC at ac_index (index in the graph at that point of the chain).  The
// route mapping is recorded so a verifier can re-derive the minor without
// re-running any search.
struct MinorStep {
  int ac_index;
  std::vector<std::pair<VertexId, VertexId>> route_mapping;
};

// Witness payloads.  Every certificate can be re-checked from its witness
// alone; no verifier ever re-runs the search that produced it (the brute
// force exhaustion is its own witness by definition).
struct FactorWitness {
  Selection selection;  // a Hamiltonian factor of the (possibly reduced) graph
};
struct ExhaustionWitness {
  int ac_count;  // all 2^ac_count factors were scanned, none spanning
};
struct DisconnectedWitness {
  std::vector<VertexId> component;  // one weak component, a proper nonempty subset
};
struct ClosedSubsetWitness {
  std::vector<int> ac_indices;  // proper nonempty K whose induced subgraph is closed
};
struct ClosedAc6Witness {
  int ac_index;
  Ac6Name cls;  // Xc2L or Xc1L1S
};
// Path through the iterative split certification: each step names the
// minimal split pair used and which spliced piece was followed; the final
// piece's recorded factor has even index, so that piece (and hence the
// root) is non-Hamiltonian.
struct SplitStep {
  std::pair<VertexId, VertexId> split_pair;
  int child;  // 0 or 1, as returned by splice_pair
};
struct SplitParityWitness {
  std::vector<SplitStep> path;
  Selection selection;  // factor of the final piece with even index
};

using Witness = std::variant<std::monostate, FactorWitness, ExhaustionWitness,
                             DisconnectedWitness, ClosedSubsetWitness, ClosedAc6Witness,
                             SplitParityWitness>;

struct Certificate {
  Verdict verdict = Verdict::Undecided;
  std::optional<Method> method;
  std::vector<MinorStep> chain;  // dirty eliminations applied before the decisive step
  Witness witness;
};

}  // namespace twodd
