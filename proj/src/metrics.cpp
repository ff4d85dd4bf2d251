#include "qsearch/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace qsearch {

double success_probability(const OutcomeDistribution& dist, const std::string& target_bits) {
  return dist.at(target_bits);
}

double expected_depth(double depth, double success) {
  if (depth < 0.0) throw std::invalid_argument("depth must be non-negative");
  if (success < 0.0 || success > 1.0 + 1e-12) throw std::invalid_argument("success must be a probability");
  if (success <= 0.0) return std::numeric_limits<double>::infinity();
  return depth / success;
}

double selectivity(const OutcomeDistribution& dist, const std::string& target_bits) {
  const double p_target = dist.at(target_bits);
  double p_best_other = 0.0;
  for (const auto& [bits, p] : dist.probabilities)
    if (bits != target_bits) p_best_other = std::max(p_best_other, p);
  if (p_target == 0.0 && p_best_other == 0.0)
    throw std::invalid_argument("selectivity of an empty distribution");
  if (p_target == 0.0) return -std::numeric_limits<double>::infinity();
  if (p_best_other == 0.0) return std::numeric_limits<double>::infinity();
  return std::log(p_target / p_best_other);
}

double distribution_overlap(const OutcomeDistribution& a, const OutcomeDistribution& b) {
  std::set<std::string> keys;
  for (const auto& [bits, p] : a.probabilities) keys.insert(bits);
  for (const auto& [bits, p] : b.probabilities) keys.insert(bits);
  double root_sum = 0.0;
  for (const std::string& bits : keys)
    root_sum += std::sqrt(std::max(0.0, a.at(bits)) * std::max(0.0, b.at(bits)));
  return root_sum * root_sum;
}

namespace {

OutcomeDistribution uniform_like(const OutcomeDistribution& ideal) {
  std::size_t width = 0;
  for (const auto& [bits, p] : ideal.probabilities) {
    if (width == 0) width = bits.size();
    if (bits.size() != width) throw std::invalid_argument("mixed key widths in distribution");
  }
  if (width == 0) throw std::invalid_argument("empty ideal distribution");
  OutcomeDistribution u;
  const std::size_t count = std::size_t{1} << width;
  const double p = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i)
    u.probabilities[bits_of_index(i, static_cast<int>(width))] = p;
  return u;
}

}  // namespace

double circuit_fidelity(const OutcomeDistribution& out, const OutcomeDistribution& ideal) {
  const OutcomeDistribution uniform = uniform_like(ideal);
  const double f_out = distribution_overlap(out, ideal);
  const double f_uniform = distribution_overlap(uniform, ideal);
  if (std::abs(1.0 - f_uniform) < 1e-12)
    throw std::domain_error("fidelity is undefined against a uniform ideal");
  return (f_out - f_uniform) / (1.0 - f_uniform);
}

double classical_baseline(std::size_t database_size, long queries) {
  if (database_size == 0) throw std::invalid_argument("empty database");
  if (queries < 0) throw std::invalid_argument("negative query count");
  // check `queries` distinct items, then guess once more if all missed
  const double q = std::min<double>(static_cast<double>(queries) + 1.0,
                                    static_cast<double>(database_size));
  return q / static_cast<double>(database_size);
}

ReportRow combine_stages(const std::vector<StageOutcome>& stages) {
  if (stages.empty()) throw std::invalid_argument("no stages to combine");
  ReportRow row;
  row.success = 1.0;
  row.ideal_success = 1.0;
  row.selectivity = std::numeric_limits<double>::infinity();
  row.fidelity = std::numeric_limits<double>::infinity();
  for (const StageOutcome& s : stages) {
    row.success *= success_probability(s.distribution, s.target_bits) * s.rescale;
    row.ideal_success *= success_probability(s.ideal, s.target_bits) * s.rescale;
    row.depth += s.depth;
    row.selectivity = std::min(row.selectivity, selectivity(s.distribution, s.target_bits));
    row.fidelity = std::min(row.fidelity, circuit_fidelity(s.distribution, s.ideal));
  }
  row.expected = expected_depth(static_cast<double>(row.depth), row.success);
  return row;
}

}  // namespace qsearch
