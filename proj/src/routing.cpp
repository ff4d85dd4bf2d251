#include "qsearch/routing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsearch {

QubitMap QubitMap::identity(int n) {
  QubitMap m;
  m.log_to_phys.resize(static_cast<std::size_t>(n));
  std::iota(m.log_to_phys.begin(), m.log_to_phys.end(), 0);
  return m;
}

namespace {

void validate_routable(const Circuit& logical, const CouplingGraph& graph, const QubitMap& map) {
  if (logical.n_qubits > graph.n_nodes())
    throw std::invalid_argument("circuit does not fit on the coupling graph");
  if (static_cast<int>(map.log_to_phys.size()) != logical.n_qubits)
    throw std::invalid_argument("placement size does not match circuit");
  std::vector<bool> used(static_cast<std::size_t>(graph.n_nodes()), false);
  for (int p : map.log_to_phys) {
    if (p < 0 || p >= graph.n_nodes()) throw std::out_of_range("placement node out of range");
    if (used[static_cast<std::size_t>(p)]) throw std::invalid_argument("placement is not injective");
    used[static_cast<std::size_t>(p)] = true;
  }
  for (const Gate& g : logical.gates)
    if (g.arity() > 2)
      throw std::invalid_argument("route expects gates decomposed to at most two qubits");
}

}  // namespace

RoutingResult route(const Circuit& logical, const CouplingGraph& graph, const QubitMap& initial,
                    int lookahead) {
  validate_routable(logical, graph, initial);
  std::vector<int> phys_of = initial.log_to_phys;          // logical -> physical
  std::vector<int> log_at(static_cast<std::size_t>(graph.n_nodes()), -1);
  for (int l = 0; l < logical.n_qubits; ++l) log_at[static_cast<std::size_t>(phys_of[static_cast<std::size_t>(l)])] = l;

  // positions of two-qubit gates, for the lookahead window
  std::vector<std::pair<int, int>> future;
  for (const Gate& g : logical.gates)
    if (g.arity() == 2) future.emplace_back(g.qubits[0], g.qubits[1]);

  RoutingResult result;
  result.circuit = Circuit(graph.n_nodes());
  result.initial = initial;

  auto do_swap = [&](int u, int v) {
    result.circuit.gates.push_back(make_gate(GateKind::swap, {u, v}));
    const int lu = log_at[static_cast<std::size_t>(u)];
    const int lv = log_at[static_cast<std::size_t>(v)];
    std::swap(log_at[static_cast<std::size_t>(u)], log_at[static_cast<std::size_t>(v)]);
    if (lu >= 0) phys_of[static_cast<std::size_t>(lu)] = v;
    if (lv >= 0) phys_of[static_cast<std::size_t>(lv)] = u;
    result.swap_count += 1;
  };

  std::size_t next_two = 0;
  for (const Gate& g : logical.gates) {
    if (g.arity() == 1) {
      Gate placed = g;
      placed.qubits = {phys_of[static_cast<std::size_t>(g.qubits[0])]};
      result.circuit.gates.push_back(std::move(placed));
      continue;
    }
    const int la = g.qubits[0], lb = g.qubits[1];
    while (graph.distance(phys_of[static_cast<std::size_t>(la)], phys_of[static_cast<std::size_t>(lb)]) > 1) {
      const int front = graph.distance(phys_of[static_cast<std::size_t>(la)], phys_of[static_cast<std::size_t>(lb)]);
      long best_score = -1;
      std::pair<int, int> best_edge{-1, -1};
      for (const auto& [u, v] : graph.edges()) {
        // placement after swapping the occupants of u and v
        auto mapped = [&](int logical_q) {
          const int p = phys_of[static_cast<std::size_t>(logical_q)];
          if (p == u) return v;
          if (p == v) return u;
          return p;
        };
        if (graph.distance(mapped(la), mapped(lb)) >= front) continue;
        long score = 0;
        const std::size_t window_end = std::min(future.size(), next_two + static_cast<std::size_t>(lookahead));
        for (std::size_t w = next_two; w < window_end; ++w)
          score += graph.distance(mapped(future[w].first), mapped(future[w].second));
        if (best_edge.first < 0 || score < best_score ||
            (score == best_score && std::pair<int, int>{u, v} < best_edge)) {
          best_score = score;
          best_edge = {u, v};
        }
      }
      do_swap(best_edge.first, best_edge.second);
    }
    Gate placed = g;
    placed.qubits = {phys_of[static_cast<std::size_t>(la)], phys_of[static_cast<std::size_t>(lb)]};
    result.circuit.gates.push_back(std::move(placed));
    next_two += 1;
  }

  auto remap = [&](const std::vector<int>& wires) {
    std::vector<int> out;
    out.reserve(wires.size());
    for (int q : wires) out.push_back(phys_of[static_cast<std::size_t>(q)]);
    return out;
  };
  result.circuit.measured = remap(logical.measured);
  result.circuit.ancillas = remap(logical.ancillas);
  result.circuit.scratch = remap(logical.scratch);
  result.final_map.log_to_phys = phys_of;
  return result;
}

namespace {

long placement_cost(const Circuit& logical, const CouplingGraph& graph, const QubitMap& map,
                    int* depth_out) {
  const RoutingResult r = route(logical, graph, map);
  if (depth_out) *depth_out = gate_depth(expand_swaps(r.circuit));
  return r.swap_count;
}

}  // namespace

QubitMap pick_initial_map(const Circuit& logical, const CouplingGraph& graph) {
  if (graph.fully_connected() && logical.n_qubits <= graph.n_nodes())
    return QubitMap::identity(logical.n_qubits);
  if (logical.n_qubits > 8)
    throw std::invalid_argument("placement search is exhaustive; register too large");

  // helper wires do best on the hub: every multi-controlled block funnels
  // through them, so pin them there and search the rest
  std::vector<int> anchors = logical.ancillas;
  anchors.insert(anchors.end(), logical.scratch.begin(), logical.scratch.end());
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

  int pinned_logical = -1, pinned_phys = -1;
  if (anchors.size() == 1) {
    pinned_logical = anchors[0];
    pinned_phys = graph.hub();
  }

  std::vector<int> free_logical, free_phys;
  for (int l = 0; l < logical.n_qubits; ++l)
    if (l != pinned_logical) free_logical.push_back(l);
  for (int p = 0; p < graph.n_nodes(); ++p)
    if (p != pinned_phys) free_phys.push_back(p);

  QubitMap best;
  long best_swaps = -1;
  int best_depth = 0;
  std::vector<int> pick(free_logical.size());
  std::iota(pick.begin(), pick.end(), 0);
  // free_phys.size() >= free_logical.size(); permute assignments of the
  // first |free_logical| chosen targets
  std::vector<int> perm(free_phys.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    QubitMap candidate;
    candidate.log_to_phys.assign(static_cast<std::size_t>(logical.n_qubits), -1);
    if (pinned_logical >= 0) candidate.log_to_phys[static_cast<std::size_t>(pinned_logical)] = pinned_phys;
    for (std::size_t i = 0; i < free_logical.size(); ++i)
      candidate.log_to_phys[static_cast<std::size_t>(free_logical[i])] = free_phys[static_cast<std::size_t>(perm[i])];
    int depth = 0;
    const long swaps = placement_cost(logical, graph, candidate, &depth);
    const bool better = best_swaps < 0 || swaps < best_swaps ||
                        (swaps == best_swaps && depth < best_depth) ||
                        (swaps == best_swaps && depth == best_depth &&
                         candidate.log_to_phys < best.log_to_phys);
    if (better) {
      best = candidate;
      best_swaps = swaps;
      best_depth = depth;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int hardware_depth(const Circuit& logical, const CouplingGraph& graph, bool swap_native) {
  if (graph.fully_connected() && logical.n_qubits <= graph.n_nodes())
    return circuit_depth(logical);
  const RoutingResult r = route(logical, graph, pick_initial_map(logical, graph));
  const Circuit physical = swap_native ? r.circuit : expand_swaps(r.circuit);
  return gate_depth(physical);
}

Circuit route_for_hardware(const Circuit& logical, const CouplingGraph& graph, bool swap_native) {
  if (graph.fully_connected() && logical.n_qubits <= graph.n_nodes()) return logical;
  const RoutingResult r = route(logical, graph, pick_initial_map(logical, graph));
  return swap_native ? r.circuit : expand_swaps(r.circuit);
}

}  // namespace qsearch
