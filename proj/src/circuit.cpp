#include "qsearch/circuit.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace qsearch {
namespace {

const Complex i_unit(0.0, 1.0);

void validate_gate(const Gate& gate, int n_qubits) {
  if (gate.qubits.empty()) throw std::invalid_argument("gate needs at least one qubit");
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] < 0 || gate.qubits[i] >= n_qubits)
      throw std::out_of_range("gate qubit out of range");
    for (std::size_t j = i + 1; j < gate.qubits.size(); ++j)
      if (gate.qubits[i] == gate.qubits[j]) throw std::invalid_argument("gate qubits must be distinct");
  }
  const int arity = gate.arity();
  switch (gate.kind) {
    case GateKind::h: case GateKind::x: case GateKind::y: case GateKind::z:
    case GateKind::s: case GateKind::sdg: case GateKind::t: case GateKind::tdg:
    case GateKind::u1q:
      if (arity != 1) throw std::invalid_argument("single-qubit gate with wrong arity");
      break;
    case GateKind::cx: case GateKind::cz: case GateKind::swap:
      if (arity != 2) throw std::invalid_argument("two-qubit gate with wrong arity");
      break;
    case GateKind::cu1q:
      if (arity < 2) throw std::invalid_argument("cu1q needs at least one control");
      if (gate.open_controls >> (arity - 1)) throw std::invalid_argument("open-control mask out of range");
      break;
    case GateKind::mcx:
      if (arity < 2) throw std::invalid_argument("mcx needs at least one control");
      break;
  }
}

bool is_diagonal(const Matrix& m, double tol) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r != c && std::abs(m(r, c)) > tol) return false;
  return true;
}

bool matrix_is_identity(const Matrix& m, double tol) {
  return (m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

Matrix2 single_qubit_matrix(GateKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2 m;
  switch (kind) {
    case GateKind::h: m << r, r, r, -r; return m;
    case GateKind::x: m << 0, 1, 1, 0; return m;
    case GateKind::y: m << 0, -i_unit, i_unit, 0; return m;
    case GateKind::z: m << 1, 0, 0, -1; return m;
    case GateKind::s: m << 1, 0, 0, i_unit; return m;
    case GateKind::sdg: m << 1, 0, 0, -i_unit; return m;
    case GateKind::t: m << 1, 0, 0, std::polar(1.0, pi / 4); return m;
    case GateKind::tdg: m << 1, 0, 0, std::polar(1.0, -pi / 4); return m;
    default: throw std::invalid_argument("not a named single-qubit gate");
  }
}

Gate Gate::dagger() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::s: g.kind = GateKind::sdg; break;
    case GateKind::sdg: g.kind = GateKind::s; break;
    case GateKind::t: g.kind = GateKind::tdg; break;
    case GateKind::tdg: g.kind = GateKind::t; break;
    case GateKind::u1q: case GateKind::cu1q: g.matrix = matrix.adjoint().eval(); break;
    default: break;  // h, x, y, z, cx, cz, swap, mcx are self-inverse
  }
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || qubits != other.qubits || open_controls != other.open_controls ||
      tag != other.tag)
    return false;
  if (kind == GateKind::u1q || kind == GateKind::cu1q) return matrix == other.matrix;
  return true;
}

Gate make_gate(GateKind kind, std::vector<int> qubits) {
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  return g;
}

Gate make_u1q(int qubit, const Matrix2& matrix) {
  Gate g;
  g.kind = GateKind::u1q;
  g.qubits = {qubit};
  g.matrix = matrix;
  return g;
}

Gate make_cu1q(std::vector<int> controls, int target, const Matrix2& matrix,
               std::uint32_t open_controls, std::string tag) {
  Gate g;
  g.kind = GateKind::cu1q;
  g.qubits = std::move(controls);
  g.qubits.push_back(target);
  g.matrix = matrix;
  g.open_controls = open_controls;
  g.tag = std::move(tag);
  return g;
}

Matrix gate_matrix(const Gate& gate) {
  const int arity = gate.arity();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity);
  switch (gate.kind) {
    case GateKind::u1q:
      return gate.matrix;
    case GateKind::h: case GateKind::x: case GateKind::y: case GateKind::z:
    case GateKind::s: case GateKind::sdg: case GateKind::t: case GateKind::tdg:
      return single_qubit_matrix(gate.kind);
    case GateKind::cz: {
      Matrix m = Matrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::swap: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1.0;
      m(1, 2) = m(2, 1) = 1.0;
      return m;
    }
    case GateKind::cx: case GateKind::mcx: case GateKind::cu1q: {
      Matrix2 payload;
      if (gate.kind == GateKind::cu1q) payload = gate.matrix;
      else payload = single_qubit_matrix(GateKind::x);
      const std::uint32_t open = gate.kind == GateKind::cu1q ? gate.open_controls : 0u;
      Matrix m = Matrix::Zero(dim, dim);
      for (std::size_t b = 0; b < static_cast<std::size_t>(dim); ++b) {
        if (b & 1u) continue;  // handle each target pair once, from its 0 branch
        bool active = true;
        for (int c = 0; c < arity - 1; ++c) {
          const int bit = static_cast<int>((b >> (arity - 1 - c)) & 1u);
          const int want = (open >> c) & 1u ? 0 : 1;
          active = active && (bit == want);
        }
        const auto b0 = static_cast<Eigen::Index>(b);
        const auto b1 = static_cast<Eigen::Index>(b | 1u);
        if (active) {
          m(b0, b0) = payload(0, 0);
          m(b0, b1) = payload(0, 1);
          m(b1, b0) = payload(1, 0);
          m(b1, b1) = payload(1, 1);
        } else {
          m(b0, b0) = 1.0;
          m(b1, b1) = 1.0;
        }
      }
      return m;
    }
  }
  throw std::logic_error("unhandled gate kind");
}

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::h: return "h";
    case GateKind::x: return "x";
    case GateKind::y: return "y";
    case GateKind::z: return "z";
    case GateKind::s: return "s";
    case GateKind::sdg: return "sdg";
    case GateKind::t: return "t";
    case GateKind::tdg: return "tdg";
    case GateKind::u1q: return "u1q";
    case GateKind::cx: return "cx";
    case GateKind::cz: return "cz";
    case GateKind::swap: return "swap";
    case GateKind::cu1q: return "cu1q";
    case GateKind::mcx: return "mcx";
  }
  throw std::logic_error("unhandled gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> table = {
      {"h", GateKind::h}, {"x", GateKind::x}, {"y", GateKind::y}, {"z", GateKind::z},
      {"s", GateKind::s}, {"sdg", GateKind::sdg}, {"t", GateKind::t}, {"tdg", GateKind::tdg},
      {"u1q", GateKind::u1q}, {"cx", GateKind::cx}, {"cz", GateKind::cz},
      {"swap", GateKind::swap}, {"cu1q", GateKind::cu1q}, {"mcx", GateKind::mcx}};
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown gate name: " + name);
  return it->second;
}

void Circuit::append(Gate gate) {
  validate_gate(gate, n_qubits);
  gates.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits) throw std::invalid_argument("qubit counts differ");
  for (const Gate& g : other.gates) gates.push_back(g);
}

Circuit Circuit::dagger() const {
  Circuit out(n_qubits);
  out.ancillas = ancillas;
  out.scratch = scratch;
  out.measured = measured;
  out.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.gates.push_back(it->dagger());
  return out;
}

bool Circuit::operator==(const Circuit& other) const {
  return n_qubits == other.n_qubits && gates == other.gates && ancillas == other.ancillas &&
         scratch == other.scratch && measured == other.measured;
}

namespace {

// ASAP layer assignment where a maximal single-qubit run shares one layer;
// reused by depth, two-qubit depth, and anything needing the schedule
std::vector<int> layer_assignment(const Circuit& circuit, int* depth_out) {
  std::vector<int> last(static_cast<std::size_t>(circuit.n_qubits), 0);
  std::vector<bool> run_open(static_cast<std::size_t>(circuit.n_qubits), false);
  std::vector<int> layer(circuit.gates.size(), 0);
  int depth = 0;
  for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
    const Gate& g = circuit.gates[gi];
    if (g.single_qubit()) {
      const auto q = static_cast<std::size_t>(g.qubits[0]);
      if (run_open[q]) {
        layer[gi] = last[q];
      } else {
        last[q] += 1;
        run_open[q] = true;
        layer[gi] = last[q];
      }
    } else {
      int l = 0;
      for (int q : g.qubits) l = std::max(l, last[static_cast<std::size_t>(q)]);
      l += 1;
      for (int q : g.qubits) {
        last[static_cast<std::size_t>(q)] = l;
        run_open[static_cast<std::size_t>(q)] = false;
      }
      layer[gi] = l;
    }
    depth = std::max(depth, layer[gi]);
  }
  if (depth_out) *depth_out = depth;
  return layer;
}

}  // namespace

int circuit_depth(const Circuit& circuit) {
  int depth = 0;
  layer_assignment(circuit, &depth);
  return depth;
}

int two_qubit_depth(const Circuit& circuit) {
  const std::vector<int> layer = layer_assignment(circuit, nullptr);
  std::set<int> multi;
  for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi)
    if (!circuit.gates[gi].single_qubit()) multi.insert(layer[gi]);
  return static_cast<int>(multi.size());
}

int gate_depth(const Circuit& circuit) {
  std::vector<int> last(circuit.n_qubits, 0);
  int depth = 0;
  for (const Gate& gate : circuit.gates) {
    int level = 0;
    for (int q : gate.qubits) level = std::max(level, last[q]);
    ++level;
    for (int q : gate.qubits) last[q] = level;
    depth = std::max(depth, level);
  }
  return depth;
}

Circuit fuse_single_qubit_runs(const Circuit& circuit) {
  Circuit out(circuit.n_qubits);
  out.ancillas = circuit.ancillas;
  out.scratch = circuit.scratch;
  out.measured = circuit.measured;
  struct Run {
    Matrix2 product;
    Gate first;
    int length = 0;
  };
  std::vector<std::optional<Run>> pending(static_cast<std::size_t>(circuit.n_qubits));
  auto flush = [&](int q) {
    auto& slot = pending[static_cast<std::size_t>(q)];
    if (!slot) return;
    if (slot->length == 1) out.gates.push_back(slot->first);
    else out.gates.push_back(make_u1q(q, slot->product));
    slot.reset();
  };
  for (const Gate& g : circuit.gates) {
    if (g.single_qubit()) {
      const Matrix2 m = g.kind == GateKind::u1q ? g.matrix : single_qubit_matrix(g.kind);
      auto& slot = pending[static_cast<std::size_t>(g.qubits[0])];
      if (slot) {
        slot->product = (m * slot->product).eval();
        slot->length += 1;
      } else {
        slot = Run{m, g, 1};
      }
    } else {
      for (int q : g.qubits) flush(q);
      out.gates.push_back(g);
    }
  }
  for (int q = 0; q < circuit.n_qubits; ++q) flush(q);
  return out;
}

Circuit prune_dead_gates(const Circuit& circuit) {
  // a gate whose entire support gets traced out before readout cannot move
  // any retained marginal; ancillas stay protected so the clean-return
  // contract survives the pass
  std::set<int> protected_qubits(circuit.measured.begin(), circuit.measured.end());
  protected_qubits.insert(circuit.ancillas.begin(), circuit.ancillas.end());
  if (protected_qubits.empty()) return circuit;
  std::vector<bool> keep(circuit.gates.size(), false);
  for (std::size_t r = circuit.gates.size(); r-- > 0;) {
    const Gate& g = circuit.gates[r];
    bool touches = false;
    for (int q : g.qubits) touches = touches || protected_qubits.count(q) > 0;
    if (touches) {
      keep[r] = true;
      protected_qubits.insert(g.qubits.begin(), g.qubits.end());
    }
  }
  Circuit out(circuit.n_qubits);
  out.ancillas = circuit.ancillas;
  out.scratch = circuit.scratch;
  out.measured = circuit.measured;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i)
    if (keep[i]) out.gates.push_back(circuit.gates[i]);
  return out;
}

namespace {

// may `mid` slide past a diagonal gate supported on `span`?
bool commutes_with_diagonal_on(const Gate& mid, const std::vector<int>& span) {
  std::vector<int> overlap;
  for (int q : mid.qubits)
    if (std::find(span.begin(), span.end(), q) != span.end()) overlap.push_back(q);
  if (overlap.empty()) return true;
  switch (mid.kind) {
    case GateKind::z: case GateKind::s: case GateKind::sdg:
    case GateKind::t: case GateKind::tdg: case GateKind::cz:
      return true;  // diagonal themselves
    case GateKind::u1q:
      return is_diagonal(mid.matrix, 1e-12);
    case GateKind::cx: case GateKind::mcx: case GateKind::cu1q: {
      // fine when the shared qubits only serve as controls
      const int target = mid.qubits.back();
      bool target_shared = std::find(overlap.begin(), overlap.end(), target) != overlap.end();
      if (!target_shared) return true;
      return mid.kind == GateKind::cu1q && is_diagonal(mid.matrix, 1e-12);
    }
    default:
      return false;  // h, x, y, swap on a shared qubit
  }
}

}  // namespace

Circuit elide_tagged_pairs(const Circuit& circuit, const std::string& tag) {
  std::vector<std::size_t> tagged;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i)
    if (circuit.gates[i].tag == tag && !tag.empty()) tagged.push_back(i);
  std::vector<bool> removed(circuit.gates.size(), false);
  std::size_t k = 0;
  while (k + 1 < tagged.size()) {
    const std::size_t a = tagged[k];
    const std::size_t b = tagged[k + 1];
    const Gate& first = circuit.gates[a];
    const Gate& second = circuit.gates[b];
    bool ok = first.qubits == second.qubits;
    if (ok) {
      const Matrix ma = gate_matrix(first);
      ok = is_diagonal(ma, 1e-12) && matrix_is_identity(ma * gate_matrix(second), 1e-12);
    }
    for (std::size_t m = a + 1; ok && m < b; ++m)
      ok = removed[m] || commutes_with_diagonal_on(circuit.gates[m], first.qubits);
    if (ok) {
      removed[a] = removed[b] = true;
      k += 2;
    } else {
      k += 1;
    }
  }
  Circuit out(circuit.n_qubits);
  out.ancillas = circuit.ancillas;
  out.scratch = circuit.scratch;
  out.measured = circuit.measured;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i)
    if (!removed[i]) out.gates.push_back(circuit.gates[i]);
  return out;
}

Circuit expand_swaps(const Circuit& circuit) {
  Circuit out(circuit.n_qubits);
  out.ancillas = circuit.ancillas;
  out.scratch = circuit.scratch;
  out.measured = circuit.measured;
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::swap) {
      out.gates.push_back(make_gate(GateKind::cx, {g.qubits[0], g.qubits[1]}));
      out.gates.push_back(make_gate(GateKind::cx, {g.qubits[1], g.qubits[0]}));
      out.gates.push_back(make_gate(GateKind::cx, {g.qubits[0], g.qubits[1]}));
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

GateCounts count_gates(const Circuit& circuit) {
  GateCounts c;
  for (const Gate& g : circuit.gates) {
    c.total += 1;
    if (g.single_qubit()) c.single += 1;
    switch (g.kind) {
      case GateKind::cx: c.cx += 1; break;
      case GateKind::cz: c.cz += 1; break;
      case GateKind::swap: c.swaps += 1; break;
      case GateKind::t: case GateKind::tdg: c.t_like += 1; break;
      case GateKind::cu1q: case GateKind::mcx: c.other += 1; break;
      default: break;
    }
  }
  return c;
}

Matrix unitary_of(const Circuit& circuit) {
  if (circuit.n_qubits > 12) throw std::invalid_argument("unitary_of limited to 12 qubits");
  const auto dim = static_cast<Eigen::Index>(dim_of(circuit.n_qubits));
  Matrix u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Vector e = Vector::Zero(dim);
    e(col) = 1.0;
    QuantumState state = QuantumState::from_vector(std::move(e));
    for (const Gate& g : circuit.gates) apply_gate(state, g);
    u.col(col) = state.amplitudes();
  }
  return u;
}

void apply_gate(QuantumState& state, const Gate& gate) {
  apply_unitary(state, gate_matrix(gate), gate.qubits);
}

QuantumState run_pure(const Circuit& circuit) {
  QuantumState state = QuantumState::zero_pure(circuit.n_qubits);
  for (const Gate& g : circuit.gates) apply_gate(state, g);
  return state;
}

QuantumState run_density(const Circuit& circuit, const NoiseModel& noise) {
  QuantumState state = QuantumState::zero_density(circuit.n_qubits);
  std::vector<int> all(static_cast<std::size_t>(circuit.n_qubits));
  for (int q = 0; q < circuit.n_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
  for (const Gate& g : circuit.gates) {
    apply_gate(state, g);
    if (!noise.enabled()) continue;
    const double eps = g.single_qubit() ? noise.eps1 : noise.eps2;
    if (eps <= 0.0) continue;
    apply_depolarizing(state, noise.global ? all : g.qubits, eps);
  }
  return state;
}

OutcomeDistribution run_trajectories(const Circuit& circuit, const NoiseModel& noise,
                                     int trajectories, std::uint64_t seed) {
  if (trajectories <= 0) throw std::invalid_argument("trajectory count must be positive");
  if (circuit.measured.empty()) throw std::invalid_argument("circuit has no measured qubits");
  std::vector<int> all(static_cast<std::size_t>(circuit.n_qubits));
  for (int q = 0; q < circuit.n_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::map<std::string, double> acc;
  const std::array<GateKind, 3> paulis = {GateKind::x, GateKind::y, GateKind::z};
  for (int t = 0; t < trajectories; ++t) {
    QuantumState state = QuantumState::zero_pure(circuit.n_qubits);
    for (const Gate& g : circuit.gates) {
      apply_gate(state, g);
      if (!noise.enabled()) continue;
      const double eps = g.single_qubit() ? noise.eps1 : noise.eps2;
      if (eps <= 0.0 || uniform() >= eps) continue;
      const std::vector<int>& hit = noise.global ? all : g.qubits;
      // uniform Pauli string over the hit qubits, identity letters included
      const std::size_t options = std::size_t{1} << (2 * hit.size());
      auto pick = static_cast<std::size_t>(uniform() * static_cast<double>(options));
      pick = std::min(pick, options - 1);
      for (std::size_t qi = 0; qi < hit.size(); ++qi) {
        const std::size_t letter = (pick >> (2 * qi)) & 3u;
        if (letter == 0) continue;
        apply_unitary(state, single_qubit_matrix(paulis[letter - 1]), {hit[qi]});
      }
    }
    const OutcomeDistribution d = measure_distribution(state, circuit.measured);
    for (const auto& [bits, p] : d.probabilities) acc[bits] += p;
  }
  OutcomeDistribution out;
  for (const auto& [bits, p] : acc)
    out.probabilities[bits] = p / static_cast<double>(trajectories);
  return out;
}

OutcomeDistribution measured_distribution(const Circuit& circuit, const NoiseModel& noise) {
  if (circuit.measured.empty()) throw std::invalid_argument("circuit has no measured qubits");
  if (noise.enabled()) {
    const QuantumState state = run_density(circuit, noise);
    return measure_distribution(state, circuit.measured);
  }
  const QuantumState state = run_pure(circuit);
  return measure_distribution(state, circuit.measured);
}

namespace {

nlohmann::json matrix2_to_json(const Matrix2& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < 2; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < 2; ++c)
      row.push_back(nlohmann::json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Matrix2 matrix2_from_json(const nlohmann::json& j) {
  Matrix2 m;
  for (Eigen::Index r = 0; r < 2; ++r)
    for (Eigen::Index c = 0; c < 2; ++c)
      m(r, c) = Complex(j.at(r).at(c).at(0).get<double>(), j.at(r).at(c).at(1).get<double>());
  return m;
}

}  // namespace

std::string to_json(const Circuit& circuit) {
  nlohmann::json j;
  j["n_qubits"] = circuit.n_qubits;
  j["ancillas"] = circuit.ancillas;
  j["scratch"] = circuit.scratch;
  j["measured"] = circuit.measured;
  j["gates"] = nlohmann::json::array();
  for (const Gate& g : circuit.gates) {
    nlohmann::json jg;
    jg["gate"] = gate_name(g.kind);
    jg["qubits"] = g.qubits;
    if (g.kind == GateKind::u1q || g.kind == GateKind::cu1q) jg["matrix"] = matrix2_to_json(g.matrix);
    if (g.open_controls != 0) {
      std::vector<int> open;
      for (int c = 0; c + 1 < g.arity(); ++c)
        if ((g.open_controls >> c) & 1u) open.push_back(c);
      jg["open_controls"] = open;
    }
    if (!g.tag.empty()) jg["tag"] = g.tag;
    j["gates"].push_back(jg);
  }
  return j.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Circuit circuit(j.at("n_qubits").get<int>());
  circuit.ancillas = j.value("ancillas", std::vector<int>{});
  circuit.scratch = j.value("scratch", std::vector<int>{});
  circuit.measured = j.value("measured", std::vector<int>{});
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(jg.at("gate").get<std::string>());
    g.qubits = jg.at("qubits").get<std::vector<int>>();
    if (jg.contains("matrix")) g.matrix = matrix2_from_json(jg.at("matrix"));
    if (jg.contains("open_controls"))
      for (int c : jg.at("open_controls").get<std::vector<int>>())
        g.open_controls |= std::uint32_t{1} << c;
    g.tag = jg.value("tag", std::string{});
    circuit.append(std::move(g));
  }
  return circuit;
}

}  // namespace qsearch
