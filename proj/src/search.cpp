#include "qsearch/search.hpp"

#include "qsearch/decompositions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qsearch {

SearchProblem make_problem(int n_qubits, const std::string& target_bits) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (static_cast<int>(target_bits.size()) != n_qubits)
    throw std::invalid_argument("target width does not match qubit count");
  SearchProblem p;
  p.n_qubits = n_qubits;
  p.target = index_of_bits(target_bits);
  return p;
}

int SearchSchedule::total_iterations() const {
  int total = 0;
  for (const ScheduleBlock& b : blocks) total += b.iterations;
  return total;
}

double grover_success_closed_form(int n_qubits, int iterations) {
  if (n_qubits < 1 || iterations < 0) throw std::invalid_argument("bad closed-form arguments");
  const double theta = std::asin(std::pow(2.0, -0.5 * n_qubits));
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

double hybrid_success_closed_form(int n_qubits, int local_width, int iterations) {
  if (local_width < 1 || local_width > n_qubits)
    throw std::invalid_argument("local width out of range");
  return grover_success_closed_form(local_width, iterations) *
         std::ldexp(1.0, -(n_qubits - local_width));
}

namespace {

void validate_schedule(const SearchSchedule& schedule, int max_width) {
  if (schedule.blocks.empty()) throw std::invalid_argument("schedule has no blocks");
  for (const ScheduleBlock& b : schedule.blocks) {
    if (b.width < 1 || b.width > max_width) throw std::invalid_argument("block width out of range");
    if (b.iterations < 1) throw std::invalid_argument("block iterations must be positive");
  }
}

// diffusion about the mean of each width-w suffix block; amplitudes stay
// real through oracle and diffusion, so the whole walk runs on doubles
void diffuse_suffix(std::vector<double>& amps, int width) {
  const std::size_t block = std::size_t{1} << width;
  for (std::size_t base = 0; base < amps.size(); base += block) {
    double sum = 0.0;
    for (std::size_t i = 0; i < block; ++i) sum += amps[base + i];
    const double shift = 2.0 * sum / static_cast<double>(block);
    for (std::size_t i = 0; i < block; ++i) amps[base + i] -= shift;
  }
}

void run_schedule(std::vector<double>& amps, std::size_t target, const SearchSchedule& schedule) {
  for (const ScheduleBlock& b : schedule.blocks)
    for (int it = 0; it < b.iterations; ++it) {
      amps[target] = -amps[target];
      diffuse_suffix(amps, b.width);
    }
}

}  // namespace

double schedule_success(const SearchProblem& problem, const SearchSchedule& schedule) {
  if (problem.n_qubits > 22) throw std::invalid_argument("operator walk capped at 22 qubits");
  validate_schedule(schedule, problem.n_qubits);
  const std::size_t dim = dim_of(problem.n_qubits);
  if (problem.target >= dim) throw std::out_of_range("target outside the register");
  std::vector<double> amps(dim, std::pow(static_cast<double>(dim), -0.5));
  run_schedule(amps, problem.target, schedule);
  return amps[problem.target] * amps[problem.target];
}

double schedule_success_conditioned(const SearchProblem& problem, const SearchSchedule& schedule,
                                    int local_width) {
  if (problem.n_qubits > 22) throw std::invalid_argument("operator walk capped at 22 qubits");
  if (local_width < 1 || local_width > problem.n_qubits)
    throw std::invalid_argument("local width out of range");
  validate_schedule(schedule, local_width);
  const std::size_t dim = dim_of(problem.n_qubits);
  if (problem.target >= dim) throw std::out_of_range("target outside the register");
  std::vector<double> amps(dim, 0.0);
  const std::size_t base = (problem.target >> local_width) << local_width;
  const double amp = std::pow(std::ldexp(1.0, local_width), -0.5);
  for (std::size_t i = 0; i < (std::size_t{1} << local_width); ++i) amps[base + i] = amp;
  run_schedule(amps, problem.target, schedule);
  return amps[problem.target] * amps[problem.target];
}

std::pair<double, double> stage_probabilities(const SearchProblem& problem,
                                              const TwoStagePlan& plan) {
  const int n = problem.n_qubits;
  const int m = plan.stage1_width;
  if (m < 1 || m >= n) throw std::invalid_argument("stage-one width must leave a prefix");
  validate_schedule(plan.stage1, n);
  validate_schedule(plan.stage2, n - m);

  const std::size_t dim = dim_of(n);
  std::vector<double> amps(dim, std::pow(static_cast<double>(dim), -0.5));
  run_schedule(amps, problem.target, plan.stage1);
  const std::size_t suffix = problem.target & ((std::size_t{1} << m) - 1);
  double p1 = 0.0;
  for (std::size_t prefix = 0; prefix < (dim >> m); ++prefix) {
    const double a = amps[(prefix << m) | suffix];
    p1 += a * a;
  }

  // stage two runs on the prefix register alone: with the suffix pinned to
  // the target bits the oracle reduces to a flip on the prefix pattern
  const int r = n - m;
  const std::size_t t_prefix = problem.target >> m;
  std::vector<double> prefix_amps(std::size_t{1} << r, std::pow(std::ldexp(1.0, r), -0.5));
  run_schedule(prefix_amps, t_prefix, plan.stage2);
  const double p2 = prefix_amps[t_prefix] * prefix_amps[t_prefix];
  return {p1, p2};
}

// ---- gate-level constructions ----

namespace {

void check_block(const std::vector<int>& block) {
  if (block.empty() || block.size() > data_qubits)
    throw std::invalid_argument("block must hold one to five data wires");
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i] < 0 || block[i] >= data_qubits) throw std::out_of_range("block wire out of range");
    if (i > 0 && block[i] <= block[i - 1]) throw std::invalid_argument("block must be ascending");
  }
}

bool in_block(const std::vector<int>& block, int q) {
  return std::find(block.begin(), block.end(), q) != block.end();
}

std::vector<int> suffix_block(int width) {
  std::vector<int> block;
  for (int q = data_qubits - width; q < data_qubits; ++q) block.push_back(q);
  return block;
}

void check_problem(const SearchProblem& problem) {
  if (problem.n_qubits != data_qubits)
    throw std::invalid_argument("gate-level constructions are fixed to the five-wire register");
  if (problem.target >= dim_of(data_qubits)) throw std::out_of_range("target outside the register");
}

// phase flip on |11111> of the data wires: three controls funnel through
// the helper, leaving a doubly-controlled Z between helper, the fourth
// control, and the phase target
Circuit all_ones_phase(const OracleAnchor& anchor) {
  Circuit c(register_width);
  c.append(build_relative_phase_cccy(register_width, anchor.triple[0], anchor.triple[1],
                                     anchor.triple[2], helper_qubit, false));
  c.append(make_gate(GateKind::h, {anchor.phase_target}));
  c.append(build_toffoli(register_width, helper_qubit, anchor.fourth, anchor.phase_target));
  c.append(make_gate(GateKind::h, {anchor.phase_target}));
  c.append(build_relative_phase_cccy(register_width, anchor.triple[0], anchor.triple[1],
                                     anchor.triple[2], helper_qubit, true));
  return c;
}

}  // namespace

OracleAnchor anchor_for_block(const std::vector<int>& block) {
  check_block(block);
  OracleAnchor anchor;
  if (block.size() >= 2) {
    anchor.phase_target = block[block.size() - 1];
    anchor.fourth = block[block.size() - 2];
  } else {
    anchor.phase_target = block[0];
    anchor.fourth = -1;
    for (int q = data_qubits - 1; q >= 0; --q)
      if (q != anchor.phase_target && anchor.fourth < 0) anchor.fourth = q;
  }
  std::vector<int> members, others;
  for (int q = 0; q < data_qubits; ++q) {
    if (q == anchor.phase_target || q == anchor.fourth) continue;
    (in_block(block, q) ? members : others).push_back(q);
  }
  members.insert(members.end(), others.begin(), others.end());
  anchor.triple = {members[0], members[1], members[2]};
  return anchor;
}

Circuit build_oracle(const SearchProblem& problem) {
  std::vector<int> all(data_qubits);
  for (int q = 0; q < data_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
  return build_oracle_anchored(problem, anchor_for_block(all));
}

Circuit build_oracle_anchored(const SearchProblem& problem, const OracleAnchor& anchor) {
  check_problem(problem);
  Circuit c(register_width);
  c.ancillas = {helper_qubit};
  std::vector<int> zeros;
  for (int q = 0; q < data_qubits; ++q)
    if (bit_of(problem.target, q, data_qubits) == 0) zeros.push_back(q);
  for (int q : zeros) c.append(make_gate(GateKind::x, {q}));
  c.append(all_ones_phase(anchor));
  for (int q : zeros) c.append(make_gate(GateKind::x, {q}));
  return elide_tagged_pairs(c, cccy_fix_tag);
}

Circuit build_diffusion(const std::vector<int>& block) {
  check_block(block);
  Circuit c(register_width);
  for (int q : block) {
    c.append(make_gate(GateKind::h, {q}));
    c.append(make_gate(GateKind::x, {q}));
  }
  switch (block.size()) {
    case 1:
      c.append(make_gate(GateKind::z, {block[0]}));
      break;
    case 2:
      c.append(make_gate(GateKind::cz, {block[0], block[1]}));
      break;
    case 3:
      c.append(make_gate(GateKind::h, {block[2]}));
      c.append(build_toffoli(register_width, block[0], block[1], block[2]));
      c.append(make_gate(GateKind::h, {block[2]}));
      break;
    case 4:
      c.append(make_gate(GateKind::h, {block[3]}));
      c.append(build_c3x(register_width, block[0], block[1], block[2], block[3]));
      c.append(make_gate(GateKind::h, {block[3]}));
      break;
    case 5:
      c.ancillas = {helper_qubit};
      c.append(all_ones_phase(anchor_for_block(block)));
      break;
  }
  for (int q : block) {
    c.append(make_gate(GateKind::x, {q}));
    c.append(make_gate(GateKind::h, {q}));
  }
  return elide_tagged_pairs(c, cccy_fix_tag);
}

Circuit build_diffusion(int width) { return build_diffusion(suffix_block(width)); }

namespace {

// shared stage assembly: the block is put in superposition and wires
// outside it are either pinned to the target bits with X gates (guessed or
// injected values) or put in superposition too (opening stage of a split
// run); then `rounds` of anchored oracle plus block diffusion run before
// reading out the block
Circuit build_stage_circuit(const SearchProblem& problem, const std::vector<int>& block,
                            int rounds, bool uniform_outside) {
  check_problem(problem);
  check_block(block);
  Circuit c(register_width);
  c.measured = block;
  if (block.size() == data_qubits) c.ancillas = {helper_qubit};
  else c.scratch = {helper_qubit};
  for (int q = 0; q < data_qubits; ++q) {
    if (in_block(block, q) || uniform_outside) c.append(make_gate(GateKind::h, {q}));
    else if (bit_of(problem.target, q, data_qubits) == 1) c.append(make_gate(GateKind::x, {q}));
  }
  const OracleAnchor anchor = anchor_for_block(block);
  for (int round = 0; round < rounds; ++round) {
    c.append(build_oracle_anchored(problem, anchor));
    c.append(build_diffusion(block));
  }
  return prune_dead_gates(c);
}

std::string bits_on_block(const SearchProblem& problem, const std::vector<int>& block) {
  std::string bits;
  for (int q : block) bits.push_back(static_cast<char>('0' + bit_of(problem.target, q, data_qubits)));
  return bits;
}

}  // namespace

Circuit build_local_iteration(const SearchProblem& problem, int width) {
  return build_stage_circuit(problem, suffix_block(width), 1, false);
}

std::vector<BenchmarkId> all_benchmarks() {
  return {BenchmarkId::g5m5,   BenchmarkId::g5g5m5,          BenchmarkId::r2g3m3,
          BenchmarkId::r3g2m2, BenchmarkId::g2m2_then_g3m3,  BenchmarkId::g3m3_then_g2m2};
}

std::string benchmark_name(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::g5m5: return "g5m5";
    case BenchmarkId::g5g5m5: return "g5g5m5";
    case BenchmarkId::r2g3m3: return "r2g3m3";
    case BenchmarkId::r3g2m2: return "r3g2m2";
    case BenchmarkId::g2m2_then_g3m3: return "g2m2-g3m3";
    case BenchmarkId::g3m3_then_g2m2: return "g3m3-g2m2";
  }
  throw std::logic_error("unhandled benchmark id");
}

BenchmarkId benchmark_from_name(const std::string& name) {
  // case-insensitive, and the vertical-bar spelling of the two-stage names
  // maps onto the canonical dash
  std::string canon;
  for (char ch : name)
    canon.push_back(ch == '|' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  for (BenchmarkId id : all_benchmarks())
    if (benchmark_name(id) == canon) return id;
  throw std::invalid_argument("unknown benchmark name: " + name);
}

double StagePlan::rescale() const { return std::ldexp(1.0, -guessed_bits); }

double BenchmarkCircuits::ideal_success() const {
  double p = 1.0;
  for (const StagePlan& s : stages) p *= s.ideal_success * s.rescale();
  return p;
}

BenchmarkCircuits build_benchmark(BenchmarkId id, const SearchProblem& problem) {
  check_problem(problem);
  BenchmarkCircuits bench;
  bench.id = id;
  bench.problem = problem;

  auto stage = [&](const std::vector<int>& block, int rounds, double ideal, int guessed,
                   bool uniform_outside = false) {
    StagePlan plan;
    plan.circuit = build_stage_circuit(problem, block, rounds, uniform_outside);
    plan.target_bits = bits_on_block(problem, block);
    plan.ideal_success = ideal;
    plan.guessed_bits = guessed;
    return plan;
  };
  const auto one_block = [](int width, int iterations) {
    return SearchSchedule{{ScheduleBlock{width, iterations}}};
  };

  switch (id) {
    case BenchmarkId::g5m5:
      bench.stages.push_back(
          stage(suffix_block(5), 1, schedule_success(problem, one_block(5, 1)), 0));
      break;
    case BenchmarkId::g5g5m5:
      bench.stages.push_back(
          stage(suffix_block(5), 2, schedule_success(problem, one_block(5, 2)), 0));
      break;
    case BenchmarkId::r2g3m3:
      bench.stages.push_back(stage(
          suffix_block(3), 1, schedule_success_conditioned(problem, one_block(3, 1), 3), 2));
      break;
    case BenchmarkId::r3g2m2:
      bench.stages.push_back(stage(
          suffix_block(2), 1, schedule_success_conditioned(problem, one_block(2, 1), 2), 3));
      break;
    case BenchmarkId::g2m2_then_g3m3: {
      TwoStagePlan plan{one_block(2, 1), 2, one_block(3, 1)};
      const auto [p1, p2] = stage_probabilities(problem, plan);
      bench.stages.push_back(stage(suffix_block(2), 1, p1, 0, true));
      bench.stages.push_back(stage({0, 1, 2}, 1, p2, 0));
      break;
    }
    case BenchmarkId::g3m3_then_g2m2: {
      TwoStagePlan plan{one_block(3, 1), 3, one_block(2, 1)};
      const auto [p1, p2] = stage_probabilities(problem, plan);
      bench.stages.push_back(stage(suffix_block(3), 1, p1, 0, true));
      bench.stages.push_back(stage({0, 1}, 1, p2, 0));
      break;
    }
  }
  return bench;
}

double sampled_success(const BenchmarkCircuits& bench,
                       const std::vector<OutcomeDistribution>& stage_distributions, long shots,
                       std::uint64_t seed) {
  if (shots <= 0) throw std::invalid_argument("shots must be positive");
  if (stage_distributions.size() != bench.stages.size())
    throw std::invalid_argument("one distribution per stage required");
  struct Sampler {
    std::vector<std::string> keys;
    std::vector<double> cdf;
  };
  std::vector<Sampler> samplers;
  for (const OutcomeDistribution& dist : stage_distributions) {
    Sampler s;
    double run = 0.0;
    for (const auto& [bits, p] : dist.probabilities) {
      run += std::max(0.0, p);
      s.keys.push_back(bits);
      s.cdf.push_back(run);
    }
    if (s.keys.empty() || run <= 0.0) throw std::invalid_argument("empty stage distribution");
    samplers.push_back(std::move(s));
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  long hits = 0;
  for (long shot = 0; shot < shots; ++shot) {
    bool ok = true;
    for (std::size_t si = 0; ok && si < bench.stages.size(); ++si) {
      const StagePlan& plan = bench.stages[si];
      if (plan.guessed_bits > 0 && uniform() >= plan.rescale()) {
        ok = false;
        break;
      }
      const Sampler& s = samplers[si];
      const double u = uniform() * s.cdf.back();
      const auto it = std::upper_bound(s.cdf.begin(), s.cdf.end(), u);
      const std::size_t idx = std::min(s.keys.size() - 1, static_cast<std::size_t>(it - s.cdf.begin()));
      ok = s.keys[idx] == plan.target_bits;
    }
    hits += ok ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(shots);
}

}  // namespace qsearch
