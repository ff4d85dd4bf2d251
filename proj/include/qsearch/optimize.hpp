#pragma once

// Depth-aware schedule selection: a per-width cost model measured from the
// built circuits (or supplied abstractly), the optimal fixed-iteration
// stopping point for plain amplitude amplification, exhaustive schedule
// search against the model, and the noise level where a benchmark stops
// beating the classical baseline.

#include "qsearch/coupling.hpp"
#include "qsearch/metrics.hpp"
#include "qsearch/search.hpp"

#include <map>

namespace qsearch {

struct DepthModel {
  double prep = 1.0;                 // opening preparation layer
  double oracle = 1.0;               // one oracle application
  std::map<int, double> diffusion;   // width -> diffusion depth
  std::map<int, double> terminal;    // width -> measured full-round depth, optional

  // abstract model counting oracle calls only
  static DepthModel unit();
  // measured from the gate-level constructions placed on the graph
  static DepthModel from_graph(const SearchProblem& problem, const CouplingGraph& graph);

  double iteration_depth(int width) const;  // oracle + diffusion
  // additive estimate; when a terminal figure exists for the last block's
  // width, the final round uses the measured full-round depth instead
  double schedule_depth(const SearchSchedule& schedule) const;
};

// fixed-iteration repeat-until-success: minimize iterations/success
struct StopPoint {
  long iterations = 0;
  double success = 0.0;
  double expected_iterations = 0.0;  // iterations / success
};
StopPoint optimal_stop(std::size_t database_size);

struct ScheduleChoice {
  SearchSchedule schedule;
  double success = 0.0;
  double depth = 0.0;
  double expected = 0.0;
};

// exhaustive search over block schedules (any widths, bounded block count
// and total iterations) minimizing expected depth under the model
ScheduleChoice optimize_schedule(const SearchProblem& problem, const DepthModel& model,
                                 int max_blocks, int max_total_iterations);

// smallest locked-ratio eps1 where the benchmark's end-to-end success drops
// to the classical baseline, bisected to `tol`; circuits are routed onto
// the graph and fused before the noisy run
struct NoiseThreshold {
  double eps1 = 0.0;
  bool crossed = false;  // false when no crossing below eps_max
};
NoiseThreshold noise_threshold(const BenchmarkCircuits& bench, const CouplingGraph& graph,
                               double baseline, double eps_max = 0.2, double tol = 1e-5);

// end-to-end success of the benchmark under the locked-ratio noise model,
// stages routed onto the graph and fused first
double noisy_success(const BenchmarkCircuits& bench, const CouplingGraph& graph,
                     const NoiseModel& noise);

}  // namespace qsearch
