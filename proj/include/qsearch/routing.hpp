#pragma once

// Mapping logical circuits onto a coupling graph: greedy lookahead SWAP
// insertion, initial-placement selection, and the hardware depth figure
// (routed, SWAPs expanded, every native gate counted).

#include "qsearch/circuit.hpp"
#include "qsearch/coupling.hpp"

#include <vector>

namespace qsearch {

// logical-to-physical placement
struct QubitMap {
  std::vector<int> log_to_phys;

  static QubitMap identity(int n);
  int phys(int logical) const { return log_to_phys.at(static_cast<std::size_t>(logical)); }
  bool operator==(const QubitMap& other) const { return log_to_phys == other.log_to_phys; }
};

struct RoutingResult {
  Circuit circuit;    // physical-qubit circuit, swap gates left unexpanded
  QubitMap initial;
  QubitMap final_map; // placement after all inserted swaps
  int swap_count = 0;
};

// insert swaps so every multi-qubit gate lands on an edge of the graph;
// candidate swaps must strictly shorten the pending gate's distance and are
// ranked by the summed distance of the next few two-qubit gates, ties
// broken on the lexicographically smallest edge
RoutingResult route(const Circuit& logical, const CouplingGraph& graph, const QubitMap& initial,
                    int lookahead = 5);

// best initial placement for the T-tree: the helper wire sits on the hub,
// data wires take the swap-count-minimizing assignment of the rest
QubitMap pick_initial_map(const Circuit& logical, const CouplingGraph& graph);

// routed depth with swaps expanded to three cx each (or kept whole when
// swap_native); counts every gate as its own layer because routed gates
// are pinned to the native basis, while a fully connected graph falls
// back to the logical convention of circuit_depth
int hardware_depth(const Circuit& logical, const CouplingGraph& graph, bool swap_native = false);

// full routed circuit under the default placement, swaps expanded
Circuit route_for_hardware(const Circuit& logical, const CouplingGraph& graph,
                           bool swap_native = false);

}  // namespace qsearch
