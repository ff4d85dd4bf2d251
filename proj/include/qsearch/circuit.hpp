#pragma once

// Gate-list circuit representation plus the structural passes used across
// the project: depth layering, single-qubit run fusion, dead-gate pruning,
// tagged-pair elision, SWAP expansion, and the simulation entry points.

#include "qsearch/state.hpp"
#include "qsearch/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsearch {

enum class GateKind {
  h, x, y, z, s, sdg, t, tdg, u1q,  // single qubit
  cx, cz, swap,                      // two qubit
  cu1q,                              // multi-controlled 2x2 payload, open controls allowed
  mcx,                               // opaque multi-controlled X (pre-decomposition form)
};

struct Gate {
  GateKind kind = GateKind::h;
  std::vector<int> qubits;           // controls first, target last
  Matrix2 matrix = Matrix2::Zero();  // payload for u1q / cu1q
  std::uint32_t open_controls = 0;   // cu1q: bit i set -> control i fires on |0>
  std::string tag;                   // marker consumed by elide_tagged_pairs

  int arity() const { return static_cast<int>(qubits.size()); }
  bool single_qubit() const { return qubits.size() == 1; }
  Gate dagger() const;
  bool operator==(const Gate& other) const;
};

Gate make_gate(GateKind kind, std::vector<int> qubits);
Gate make_u1q(int qubit, const Matrix2& matrix);
Gate make_cu1q(std::vector<int> controls, int target, const Matrix2& matrix,
               std::uint32_t open_controls = 0, std::string tag = "");

// 2x2 matrix of a named single-qubit kind
Matrix2 single_qubit_matrix(GateKind kind);

// full 2^arity matrix of any gate, controls included
Matrix gate_matrix(const Gate& gate);

std::string gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::vector<int> ancillas;  // start in |0> and must be returned to |0>
  std::vector<int> scratch;   // start in |0>, may finish dirty, never measured
  std::vector<int> measured;  // readout wires, in display order

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void append(Gate gate);
  void append(const Circuit& other);  // concatenates gates; qubit counts must match
  Circuit dagger() const;
  bool operator==(const Circuit& other) const;
};

// circuit depth under the layering rule used throughout: gates are packed
// as-soon-as-possible and a maximal run of adjacent single-qubit gates on
// one wire costs a single layer (it compiles to one hardware pulse)
int circuit_depth(const Circuit& circuit);

// number of layers holding at least one multi-qubit gate, same packing
int two_qubit_depth(const Circuit& circuit);

// plain as-soon-as-possible depth where every gate takes its own layer;
// this is the count that matters once a circuit is routed to hardware and
// single-qubit runs can no longer be merged without re-synthesis
int gate_depth(const Circuit& circuit);

// merge every maximal single-qubit run into one u1q gate
Circuit fuse_single_qubit_runs(const Circuit& circuit);

// drop gates that cannot influence the measured or ancilla wires: walk
// backwards keeping a gate only if it touches a protected qubit, then
// protect everything it touches
Circuit prune_dead_gates(const Circuit& circuit);

// cancel adjacent-in-commutation pairs of mutually inverse gates carrying
// the given tag; a pair goes away only when every gate between the two
// leaves their span untouched apart from diagonal action or control use
Circuit elide_tagged_pairs(const Circuit& circuit, const std::string& tag);

// rewrite swap gates as three cx gates
Circuit expand_swaps(const Circuit& circuit);

struct GateCounts {
  int total = 0;
  int single = 0;
  int cx = 0;
  int cz = 0;
  int swaps = 0;
  int t_like = 0;  // t and tdg
  int other = 0;   // cu1q / mcx
};
GateCounts count_gates(const Circuit& circuit);

// full unitary of the circuit (guarded to small registers)
Matrix unitary_of(const Circuit& circuit);

void apply_gate(QuantumState& state, const Gate& gate);

// noiseless statevector run from |0...0>
QuantumState run_pure(const Circuit& circuit);

// exact density-matrix run; when noise is enabled a depolarizing channel
// follows every gate (eps1 on single-qubit gates, eps2 otherwise), on the
// gate's own qubits or on the whole register in global mode
QuantumState run_density(const Circuit& circuit, const NoiseModel& noise = {});

// stochastic-Pauli trajectory average: after each gate, with the gate's
// eps, a uniformly random Pauli string (identity included) hits its qubits
OutcomeDistribution run_trajectories(const Circuit& circuit, const NoiseModel& noise,
                                     int trajectories, std::uint64_t seed);

// marginal distribution of circuit.measured; routes through run_density
// when noise is enabled, run_pure otherwise
OutcomeDistribution measured_distribution(const Circuit& circuit, const NoiseModel& noise = {});

std::string to_json(const Circuit& circuit);
Circuit circuit_from_json(const std::string& text);

}  // namespace qsearch
