#include "qsearch/state.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace qsearch {
namespace {

int log2_exact(std::size_t dim) {
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim)
    throw std::invalid_argument("dimension is not a power of two");
  return n;
}

void check_qubits(const std::vector<int>& qubits, int n_qubits) {
  if (qubits.empty()) throw std::invalid_argument("empty qubit list");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits)
      throw std::out_of_range("qubit index out of range");
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j]) throw std::invalid_argument("duplicate qubit index");
  }
}

// offsets of the 2^k sub-block values and the 2^(n-k) base indices spanned
// by the remaining qubits; qubits[0] is the MSB of the sub-block value
struct BlockIndex {
  std::vector<std::size_t> offset;  // size 2^k
  std::vector<std::size_t> base;    // size 2^(n-k)
};

BlockIndex block_index(const std::vector<int>& qubits, int n_qubits) {
  const int k = static_cast<int>(qubits.size());
  BlockIndex bi;
  bi.offset.assign(std::size_t{1} << k, 0);
  for (std::size_t j = 0; j < bi.offset.size(); ++j) {
    std::size_t off = 0;
    for (int m = 0; m < k; ++m)
      if ((j >> (k - 1 - m)) & 1u) off |= std::size_t{1} << (n_qubits - 1 - qubits[static_cast<std::size_t>(m)]);
    bi.offset[j] = off;
  }
  std::vector<int> free_pos;
  for (int p = 0; p < n_qubits; ++p) {
    bool used = false;
    for (int q : qubits) used = used || (n_qubits - 1 - q == p);
    if (!used) free_pos.push_back(p);
  }
  bi.base.assign(std::size_t{1} << free_pos.size(), 0);
  for (std::size_t c = 0; c < bi.base.size(); ++c) {
    std::size_t b = 0;
    for (std::size_t m = 0; m < free_pos.size(); ++m)
      if ((c >> m) & 1u) b |= std::size_t{1} << free_pos[m];
    bi.base[c] = b;
  }
  return bi;
}

void apply_to_vector(Vector& v, const Matrix& u, const BlockIndex& bi) {
  const std::size_t k_dim = bi.offset.size();
  Vector in(static_cast<Eigen::Index>(k_dim)), out(static_cast<Eigen::Index>(k_dim));
  for (std::size_t base : bi.base) {
    for (std::size_t j = 0; j < k_dim; ++j) in(static_cast<Eigen::Index>(j)) = v(static_cast<Eigen::Index>(base + bi.offset[j]));
    out.noalias() = u * in;
    for (std::size_t j = 0; j < k_dim; ++j) v(static_cast<Eigen::Index>(base + bi.offset[j])) = out(static_cast<Eigen::Index>(j));
  }
}

}  // namespace

QuantumState QuantumState::zero_pure(int n_qubits) {
  QuantumState s;
  s.n_qubits_ = n_qubits;
  s.kind_ = StateKind::pure;
  s.amplitudes_ = Vector::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
  s.amplitudes_(0) = 1.0;
  return s;
}

QuantumState QuantumState::zero_density(int n_qubits) {
  QuantumState s;
  s.n_qubits_ = n_qubits;
  s.kind_ = StateKind::density;
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  s.density_ = Matrix::Zero(d, d);
  s.density_(0, 0) = 1.0;
  return s;
}

QuantumState QuantumState::from_vector(Vector amplitudes) {
  QuantumState s;
  s.n_qubits_ = log2_exact(static_cast<std::size_t>(amplitudes.size()));
  s.kind_ = StateKind::pure;
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

QuantumState QuantumState::from_density(Matrix rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  QuantumState s;
  s.n_qubits_ = log2_exact(static_cast<std::size_t>(rho.rows()));
  s.kind_ = StateKind::density;
  s.density_ = std::move(rho);
  return s;
}

const Vector& QuantumState::amplitudes() const {
  if (kind_ != StateKind::pure) throw std::logic_error("state is not a statevector");
  return amplitudes_;
}

Vector& QuantumState::amplitudes() {
  if (kind_ != StateKind::pure) throw std::logic_error("state is not a statevector");
  return amplitudes_;
}

const Matrix& QuantumState::density() const {
  if (kind_ != StateKind::density) throw std::logic_error("state is not a density matrix");
  return density_;
}

Matrix& QuantumState::density() {
  if (kind_ != StateKind::density) throw std::logic_error("state is not a density matrix");
  return density_;
}

QuantumState QuantumState::to_density() const {
  if (kind_ == StateKind::density) return *this;
  return from_density(amplitudes_ * amplitudes_.adjoint());
}

double QuantumState::norm_error() const {
  if (kind_ == StateKind::pure) return std::abs(amplitudes_.squaredNorm() - 1.0);
  return std::abs(density_.trace().real() - 1.0) + std::abs(density_.trace().imag());
}

std::vector<double> QuantumState::basis_probabilities() const {
  const std::size_t d = dim_of(n_qubits_);
  std::vector<double> p(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    p[i] = kind_ == StateKind::pure ? std::norm(amplitudes_(static_cast<Eigen::Index>(i)))
                                    : density_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  return p;
}

void apply_unitary(QuantumState& state, const Matrix& u, const std::vector<int>& qubits) {
  check_qubits(qubits, state.n_qubits());
  const auto k_dim = static_cast<Eigen::Index>(std::size_t{1} << qubits.size());
  if (u.rows() != k_dim || u.cols() != k_dim)
    throw std::invalid_argument("unitary dimension does not match qubit count");
  const BlockIndex bi = block_index(qubits, state.n_qubits());
  if (state.is_pure()) {
    apply_to_vector(state.amplitudes(), u, bi);
    return;
  }
  // rho -> U rho U^dag: transform the row index with U, then the column
  // index with conj(U)
  Matrix& rho = state.density();
  Vector tmp(rho.rows());
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    tmp = rho.col(c);
    apply_to_vector(tmp, u, bi);
    rho.col(c) = tmp;
  }
  const Matrix u_conj = u.conjugate();
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    tmp = rho.row(r).transpose();
    apply_to_vector(tmp, u_conj, bi);
    rho.row(r) = tmp.transpose();
  }
}

void apply_depolarizing(QuantumState& state, const std::vector<int>& qubits, double eps) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("depolarizing strength must be in [0,1]");
  if (state.is_pure())
    throw std::logic_error("depolarizing channel needs a density matrix; use trajectory sampling for statevectors");
  if (eps == 0.0) return;
  check_qubits(qubits, state.n_qubits());
  const BlockIndex bi = block_index(qubits, state.n_qubits());
  const std::size_t k_dim = bi.offset.size();
  const std::size_t f_dim = bi.base.size();
  Matrix& rho = state.density();
  // partial trace over the listed qubits, indexed by the remaining pattern
  Matrix sigma = Matrix::Zero(static_cast<Eigen::Index>(f_dim), static_cast<Eigen::Index>(f_dim));
  for (std::size_t c = 0; c < f_dim; ++c)
    for (std::size_t d = 0; d < f_dim; ++d)
      for (std::size_t j = 0; j < k_dim; ++j)
        sigma(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(d)) +=
            rho(static_cast<Eigen::Index>(bi.base[c] + bi.offset[j]),
                static_cast<Eigen::Index>(bi.base[d] + bi.offset[j]));
  rho *= (1.0 - eps);
  const double weight = eps / static_cast<double>(k_dim);
  for (std::size_t c = 0; c < f_dim; ++c)
    for (std::size_t d = 0; d < f_dim; ++d) {
      const Complex add = weight * sigma(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(d));
      for (std::size_t j = 0; j < k_dim; ++j)
        rho(static_cast<Eigen::Index>(bi.base[c] + bi.offset[j]),
            static_cast<Eigen::Index>(bi.base[d] + bi.offset[j])) += add;
    }
}

NoiseModel NoiseModel::locked(double eps1) {
  if (eps1 < 0.0 || eps1 > 1.0) throw std::invalid_argument("eps1 must be in [0,1]");
  NoiseModel m;
  m.eps1 = eps1;
  m.eps2 = std::min(1.0, 10.0 * eps1);
  return m;
}

double OutcomeDistribution::at(const std::string& bits) const {
  auto it = probabilities.find(bits);
  return it == probabilities.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total() const {
  double t = 0.0;
  for (const auto& [bits, p] : probabilities) t += p;
  return t;
}

OutcomeDistribution measure_distribution(const QuantumState& state, const std::vector<int>& qubits) {
  check_qubits(qubits, state.n_qubits());
  const std::vector<double> full = state.basis_probabilities();
  const int k = static_cast<int>(qubits.size());
  std::vector<double> acc(std::size_t{1} << k, 0.0);
  for (std::size_t i = 0; i < full.size(); ++i)
    acc[sub_index_of(i, qubits, state.n_qubits())] += full[i];
  // squared-roundoff dust: double-precision amplitudes carry at most ~1e-13
  // of accumulated error, so any bin below 1e-24 is an exact zero that the
  // arithmetic failed to cancel; snapping keeps extended-real metrics
  // (selectivity saturation) faithful to the ideal outcome
  constexpr double readout_dust = 1e-24;
  OutcomeDistribution dist;
  for (std::size_t s = 0; s < acc.size(); ++s)
    dist.probabilities[bits_of_index(s, k)] = acc[s] < readout_dust ? 0.0 : acc[s];
  return dist;
}

OutcomeDistribution sample_counts(const OutcomeDistribution& exact, long shots, std::uint64_t seed) {
  if (shots <= 0) throw std::invalid_argument("shots must be positive");
  std::vector<std::string> keys;
  std::vector<double> cdf;
  double run = 0.0;
  for (const auto& [bits, p] : exact.probabilities) {
    run += std::max(0.0, p);
    keys.push_back(bits);
    cdf.push_back(run);
  }
  if (keys.empty() || run <= 0.0) throw std::invalid_argument("cannot sample an empty distribution");
  std::map<std::string, long> counts;
  std::mt19937_64 rng(seed);
  for (long s = 0; s < shots; ++s) {
    // 53-bit uniform in [0,1); avoids std::uniform_real_distribution, whose
    // output sequence is implementation defined
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * run;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx = std::min(keys.size() - 1, static_cast<std::size_t>(it - cdf.begin()));
    counts[keys[idx]] += 1;
  }
  OutcomeDistribution out;
  out.shots = shots;
  for (const auto& [bits, c] : counts)
    out.probabilities[bits] = static_cast<double>(c) / static_cast<double>(shots);
  return out;
}

std::string to_json(const OutcomeDistribution& dist) {
  nlohmann::json j;
  j["shots"] = dist.shots;
  j["probabilities"] = nlohmann::json::object();
  for (const auto& [bits, p] : dist.probabilities) j["probabilities"][bits] = p;
  return j.dump(2);
}

OutcomeDistribution distribution_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  OutcomeDistribution dist;
  dist.shots = j.value("shots", 0L);
  for (const auto& [bits, p] : j.at("probabilities").items())
    dist.probabilities[bits] = p.get<double>();
  return dist;
}

}  // namespace qsearch
