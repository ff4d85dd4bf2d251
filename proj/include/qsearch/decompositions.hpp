#pragma once

// Multi-controlled gate constructions over the {cx, single-qubit} basis:
// the T-count-7 Toffoli (all-to-all and linear-chain layouts), an exact
// triple-controlled real-Y block whose interior is a relative-phase
// construction, the 14-cx quadruple-controlled X, and the five-control X
// assembled from one helper qubit.

#include "qsearch/circuit.hpp"

#include <string>
#include <vector>

namespace qsearch {

enum class ToffoliLayout {
  all_to_all,  // 6 cx, controls and target mutually coupled
  line,        // 8 cx, only (a,b) and (b,target) coupled
};

// doubly-controlled X on `target`; for the line layout the chain order is
// a - b - target
Circuit build_toffoli(int n_qubits, int a, int b, int target,
                      ToffoliLayout layout = ToffoliLayout::all_to_all);

// tag carried by the deferred diagonal correction inside the ccc-y block
inline const std::string cccy_fix_tag = "cccy-phase-fix";

// exact triple-controlled Y (real convention, Y|0> = -|1>, Y|1> = |0>) on
// `target`: an 18-gate relative-phase interior plus one tagged diagonal
// correction that compute/uncompute pairs can cancel
Circuit build_relative_phase_cccy(int n_qubits, int c1, int c2, int c3, int target,
                                  bool dagger = false);

// quadruple-controlled X, 14 cx, no helper
Circuit build_c3x(int n_qubits, int c1, int c2, int c3, int target);

enum class Mcx5Variant {
  relative_phase,  // ccc-y compute/uncompute around one Toffoli, corrections cancelled
  full,            // c3x compute/uncompute, every block exact on its own
};

// five-fold-controlled X on `target` using `helper` as a clean ancilla
Circuit build_mcx5(int n_qubits, const std::vector<int>& controls, int target, int helper,
                   Mcx5Variant variant = Mcx5Variant::relative_phase);

}  // namespace qsearch
