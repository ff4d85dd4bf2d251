#pragma once

// Amplitude-amplification building blocks: closed-form and operator-level
// success probabilities for full and block-local diffusion schedules, the
// gate-level oracle/diffusion constructions on the five-data-plus-helper
// register, and the assembled benchmark circuit family.

#include "qsearch/circuit.hpp"
#include "qsearch/types.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qsearch {

struct SearchProblem {
  int n_qubits = 5;          // data wires
  std::size_t target = 0;    // marked basis index, qubit 0 = MSB
};

SearchProblem make_problem(int n_qubits, const std::string& target_bits);

struct ScheduleBlock {
  int width = 0;       // suffix width the diffusion acts on
  int iterations = 0;
  bool operator==(const ScheduleBlock& o) const {
    return width == o.width && iterations == o.iterations;
  }
};

struct SearchSchedule {
  std::vector<ScheduleBlock> blocks;
  int total_iterations() const;
};

// sin^2((2j+1) asin(2^{-n/2})): plain amplitude amplification
double grover_success_closed_form(int n_qubits, int iterations);

// block-local diffusion on m of n qubits, uniform start:
// sin^2((2j+1) asin(2^{-m/2})) / 2^{n-m}
double hybrid_success_closed_form(int n_qubits, int local_width, int iterations);

// operator-level evaluation from the uniform superposition; every block
// diffuses its width-w suffix
double schedule_success(const SearchProblem& problem, const SearchSchedule& schedule);

// evaluation with the prefix already fixed to the target bits: start from
// |t_prefix> (x) |s_width> and return the block success probability
double schedule_success_conditioned(const SearchProblem& problem, const SearchSchedule& schedule,
                                    int local_width);

// two sequential runs: stage one diffuses a width-m suffix and measures it,
// stage two re-prepares with that suffix fixed and searches the prefix
struct TwoStagePlan {
  SearchSchedule stage1;
  int stage1_width = 0;
  SearchSchedule stage2;  // widths over the remaining prefix register
};

// (P1, P2): suffix hit probability, then prefix hit probability given the
// suffix was injected correctly
std::pair<double, double> stage_probabilities(const SearchProblem& problem,
                                              const TwoStagePlan& plan);

// ---- gate-level constructions (five data wires + helper wire 5) ----

inline constexpr int data_qubits = 5;
inline constexpr int helper_qubit = 5;
inline constexpr int register_width = 6;

// how the five-control phase block is wired: three controls funnel through
// the helper, the conjugated phase lands on a wire inside the measured
// block so the uncompute tail stays off the readout path
struct OracleAnchor {
  std::array<int, 3> triple;  // ccc-y controls (c1, c2, c3)
  int fourth = 0;             // remaining control
  int phase_target = 0;       // wire carrying the conjugated phase flip
};

OracleAnchor anchor_for_block(const std::vector<int>& block);

// sign flip on |target> over the data wires, helper returned clean
Circuit build_oracle(const SearchProblem& problem);
Circuit build_oracle_anchored(const SearchProblem& problem, const OracleAnchor& anchor);

// inversion about the mean on the given data block (ascending wires);
// width five routes through the helper, width four and below do not
Circuit build_diffusion(const std::vector<int>& block);
Circuit build_diffusion(int width);  // block = last `width` data wires

// one oracle+diffusion round on a width-w suffix block with the prefix
// prepared on the correct guess; width five is the full-register round
Circuit build_local_iteration(const SearchProblem& problem, int width);

// ---- benchmark circuit family ----

enum class BenchmarkId {
  g5m5,            // one full-register round
  g5g5m5,          // two full-register rounds
  r2g3m3,          // two guessed wires, one local round on the last three
  r3g2m2,          // three guessed wires, one local round on the last two
  g2m2_then_g3m3,  // local round + measure, then finish the prefix
  g3m3_then_g2m2,  // same idea, blocks swapped
};

std::vector<BenchmarkId> all_benchmarks();
std::string benchmark_name(BenchmarkId id);
BenchmarkId benchmark_from_name(const std::string& name);

struct StagePlan {
  Circuit circuit;           // six-wire register
  std::string target_bits;   // expected readout on circuit.measured
  double ideal_success = 0;  // exact hit probability of this circuit
  int guessed_bits = 0;      // wires fixed by classical guess before the run
  double rescale() const;    // correct-guess weight 2^-guessed_bits
};

struct BenchmarkCircuits {
  BenchmarkId id = BenchmarkId::g5m5;
  SearchProblem problem;
  std::vector<StagePlan> stages;

  // end-to-end success: stage probabilities multiply, guesses rescale
  double ideal_success() const;
};

BenchmarkCircuits build_benchmark(BenchmarkId id, const SearchProblem& problem);

// shot-by-shot estimate of the end-to-end success probability: guesses are
// drawn per shot, later stages only run when earlier ones hit their target
double sampled_success(const BenchmarkCircuits& bench,
                       const std::vector<OutcomeDistribution>& stage_distributions, long shots,
                       std::uint64_t seed);

}  // namespace qsearch
