#pragma once

// Figures of merit computed from measured outcome distributions. Infinity
// is a first-class value here: expected depth diverges when nothing ever
// succeeds and selectivity saturates when one side of the ratio is an
// exact zero (no epsilon floors anywhere).

#include "qsearch/state.hpp"

#include <string>
#include <vector>

namespace qsearch {

double success_probability(const OutcomeDistribution& dist, const std::string& target_bits);

// depth / success; +infinity when success is zero
double expected_depth(double depth, double success);

// ln(P_target / max P_non_target); -inf on zero numerator, +inf on zero
// denominator
double selectivity(const OutcomeDistribution& dist, const std::string& target_bits);

// squared Bhattacharyya overlap (sum_x sqrt(p_x q_x))^2
double distribution_overlap(const OutcomeDistribution& a, const OutcomeDistribution& b);

// overlap with the ideal distribution, shifted and scaled so the uniform
// distribution scores zero and the ideal itself scores one; undefined (and
// rejected) when the ideal is itself uniform
double circuit_fidelity(const OutcomeDistribution& out, const OutcomeDistribution& ideal);

// success probability of the best classical strategy after `queries` draws
// without replacement from a database of the given size
double classical_baseline(std::size_t database_size, long queries);

// per-stage measurement summary feeding the combined report
struct StageOutcome {
  OutcomeDistribution distribution;
  OutcomeDistribution ideal;
  std::string target_bits;
  int depth = 0;
  double rescale = 1.0;
};

struct ReportRow {
  double success = 0.0;        // product over stages, guess weights included
  double ideal_success = 0.0;
  int depth = 0;               // stage depths add
  double expected = 0.0;       // depth / success
  double selectivity = 0.0;    // worst stage
  double fidelity = 0.0;       // worst stage
};

ReportRow combine_stages(const std::vector<StageOutcome>& stages);

}  // namespace qsearch
