#include "qsearch/optimize.hpp"

#include "qsearch/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsearch {

DepthModel DepthModel::unit() {
  DepthModel m;
  m.prep = 0.0;
  m.oracle = 1.0;
  return m;
}

DepthModel DepthModel::from_graph(const SearchProblem& problem, const CouplingGraph& graph) {
  DepthModel m;
  m.prep = 1.0;
  m.oracle = hardware_depth(build_oracle(problem), graph);
  for (int width = 1; width <= data_qubits; ++width) {
    m.diffusion[width] = hardware_depth(build_diffusion(width), graph);
    m.terminal[width] = hardware_depth(build_local_iteration(problem, width), graph);
  }
  return m;
}

double DepthModel::iteration_depth(int width) const {
  if (diffusion.empty()) return oracle;  // oracle-call counting
  const auto it = diffusion.find(width);
  if (it == diffusion.end()) throw std::invalid_argument("no diffusion cost for this width");
  return oracle + it->second;
}

double DepthModel::schedule_depth(const SearchSchedule& schedule) const {
  if (schedule.blocks.empty()) throw std::invalid_argument("schedule has no blocks");
  double depth = prep;
  for (const ScheduleBlock& b : schedule.blocks)
    depth += static_cast<double>(b.iterations) * iteration_depth(b.width);
  const int last_width = schedule.blocks.back().width;
  const auto it = terminal.find(last_width);
  if (it != terminal.end()) depth += it->second - iteration_depth(last_width) - prep;
  return depth;
}

StopPoint optimal_stop(std::size_t database_size) {
  if (database_size < 2) throw std::invalid_argument("database too small");
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(database_size)));
  const auto j_max = static_cast<long>(
      std::ceil(pi * std::sqrt(static_cast<double>(database_size)) / 4.0));
  StopPoint best;
  best.expected_iterations = std::numeric_limits<double>::infinity();
  for (long j = 1; j <= j_max; ++j) {
    const double s = std::sin((2.0 * static_cast<double>(j) + 1.0) * theta);
    const double p = s * s;
    if (p <= 0.0) continue;
    const double cost = static_cast<double>(j) / p;
    if (cost < best.expected_iterations) {
      best.iterations = j;
      best.success = p;
      best.expected_iterations = cost;
    }
  }
  return best;
}

namespace {

bool schedule_less(const SearchSchedule& a, const SearchSchedule& b) {
  const auto key = [](const SearchSchedule& s) {
    std::vector<std::pair<int, int>> k;
    for (const ScheduleBlock& blk : s.blocks) k.emplace_back(blk.width, blk.iterations);
    return k;
  };
  return key(a) < key(b);
}

}  // namespace

ScheduleChoice optimize_schedule(const SearchProblem& problem, const DepthModel& model,
                                 int max_blocks, int max_total_iterations) {
  if (max_blocks < 1 || max_total_iterations < 1)
    throw std::invalid_argument("need at least one block and one iteration");
  ScheduleChoice best;
  best.expected = std::numeric_limits<double>::infinity();
  SearchSchedule current;

  const auto consider = [&]() {
    const double success = schedule_success(problem, current);
    const double depth = model.schedule_depth(current);
    const double expected = success > 0.0 ? depth / success
                                          : std::numeric_limits<double>::infinity();
    const bool better =
        expected < best.expected ||
        (expected == best.expected && depth < best.depth) ||
        (expected == best.expected && depth == best.depth && schedule_less(current, best.schedule));
    if (better) best = {current, success, depth, expected};
  };

  const auto extend = [&](auto&& self, int iterations_left) -> void {
    if (!current.blocks.empty()) consider();
    if (static_cast<int>(current.blocks.size()) == max_blocks || iterations_left == 0) return;
    for (int width = 1; width <= problem.n_qubits; ++width) {
      // a block repeating the previous width is the same walk as one longer
      // block, so skip the duplicate spelling
      if (!current.blocks.empty() && current.blocks.back().width == width) continue;
      for (int iters = 1; iters <= iterations_left; ++iters) {
        current.blocks.push_back({width, iters});
        self(self, iterations_left - iters);
        current.blocks.pop_back();
      }
    }
  };
  extend(extend, max_total_iterations);
  return best;
}

namespace {

struct PreparedStage {
  Circuit fused;
  std::string target_bits;
  double rescale = 1.0;
};

std::vector<PreparedStage> prepare_stages(const BenchmarkCircuits& bench,
                                          const CouplingGraph& graph) {
  std::vector<PreparedStage> out;
  for (const StagePlan& plan : bench.stages) {
    PreparedStage p;
    p.fused = fuse_single_qubit_runs(route_for_hardware(plan.circuit, graph));
    p.target_bits = plan.target_bits;
    p.rescale = plan.rescale();
    out.push_back(std::move(p));
  }
  return out;
}

double success_of(const std::vector<PreparedStage>& stages, const NoiseModel& noise) {
  double p = 1.0;
  for (const PreparedStage& s : stages) {
    const OutcomeDistribution dist = measured_distribution(s.fused, noise);
    p *= dist.at(s.target_bits) * s.rescale;
  }
  return p;
}

}  // namespace

double noisy_success(const BenchmarkCircuits& bench, const CouplingGraph& graph,
                     const NoiseModel& noise) {
  return success_of(prepare_stages(bench, graph), noise);
}

NoiseThreshold noise_threshold(const BenchmarkCircuits& bench, const CouplingGraph& graph,
                               double baseline, double eps_max, double tol) {
  if (baseline <= 0.0 || baseline >= 1.0) throw std::invalid_argument("baseline must be in (0,1)");
  if (eps_max <= 0.0 || tol <= 0.0) throw std::invalid_argument("bad bracket parameters");
  const std::vector<PreparedStage> stages = prepare_stages(bench, graph);
  const auto success = [&](double eps1) { return success_of(stages, NoiseModel::locked(eps1)); };
  if (success(0.0) <= baseline)
    throw std::invalid_argument("benchmark does not beat the baseline even noiselessly");
  const int grid = 40;
  double lo = 0.0, hi = eps_max;
  bool crossed = false;
  for (int k = 1; k <= grid; ++k) {
    const double eps = eps_max * static_cast<double>(k) / grid;
    if (success(eps) < baseline) {
      hi = eps;
      crossed = true;
      break;
    }
    lo = eps;
  }
  if (!crossed) return {eps_max, false};
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (success(mid) < baseline) hi = mid;
    else lo = mid;
  }
  return {0.5 * (lo + hi), true};
}

}  // namespace qsearch
