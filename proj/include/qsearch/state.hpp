#pragma once

// Quantum register state in either statevector or density-matrix form,
// plus the gate/noise kernels that act on it and measurement extraction.

#include "qsearch/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qsearch {

enum class StateKind { pure, density };

class QuantumState {
 public:
  static QuantumState zero_pure(int n_qubits);
  static QuantumState zero_density(int n_qubits);
  static QuantumState from_vector(Vector amplitudes);
  static QuantumState from_density(Matrix rho);

  int n_qubits() const { return n_qubits_; }
  StateKind kind() const { return kind_; }
  bool is_pure() const { return kind_ == StateKind::pure; }

  const Vector& amplitudes() const;
  Vector& amplitudes();
  const Matrix& density() const;
  Matrix& density();

  // promote a statevector to |psi><psi|; identity on density states
  QuantumState to_density() const;

  // deviation of the norm (pure) or trace (density) from one
  double norm_error() const;

  // probability of each basis outcome of the full register
  std::vector<double> basis_probabilities() const;

 private:
  QuantumState() = default;
  int n_qubits_ = 0;
  StateKind kind_ = StateKind::pure;
  Vector amplitudes_;
  Matrix density_;
};

// apply a 2^k x 2^k unitary to the listed qubits (qubits[0] = MSB of the block)
void apply_unitary(QuantumState& state, const Matrix& u, const std::vector<int>& qubits);

// depolarizing channel on the listed qubits:
//   rho -> (1 - eps) rho + eps * (I / 2^k) (x) tr_listed(rho)
// density states only; statevector callers must use trajectory sampling
void apply_depolarizing(QuantumState& state, const std::vector<int>& qubits, double eps);

struct NoiseModel {
  double eps1 = 0.0;  // per single-qubit gate (after run fusion)
  double eps2 = 0.0;  // per multi-qubit gate
  bool global = false;  // act on the whole register instead of the gate's qubits

  // locked-ratio model: eps2 = 10 * eps1, saturated at total depolarization
  static NoiseModel locked(double eps1);
  bool enabled() const { return eps1 > 0.0 || eps2 > 0.0; }
};

// outcome probabilities keyed by bitstring; shots == 0 means exact values
struct OutcomeDistribution {
  std::map<std::string, double> probabilities;
  long shots = 0;

  double at(const std::string& bits) const;
  double total() const;
};

// marginal distribution of the listed qubits, key bits in the given order
OutcomeDistribution measure_distribution(const QuantumState& state, const std::vector<int>& qubits);

// draw `shots` samples and return the normalized empirical distribution;
// deterministic for a fixed seed regardless of platform
OutcomeDistribution sample_counts(const OutcomeDistribution& exact, long shots, std::uint64_t seed);

std::string to_json(const OutcomeDistribution& dist);
OutcomeDistribution distribution_from_json(const std::string& text);

}  // namespace qsearch
