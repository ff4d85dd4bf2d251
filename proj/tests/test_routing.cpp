#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qsearch/circuit.hpp>
#include <qsearch/coupling.hpp>
#include <qsearch/routing.hpp>
#include <qsearch/search.hpp>

#include <stdexcept>

#include "oracles.hpp"

using namespace qsearch;

namespace {

const SearchProblem problem = make_problem(5, "01011");

Circuit g5_stage() { return build_benchmark(BenchmarkId::g5m5, problem).stages[0].circuit; }

}  // namespace

TEST_CASE("coupling graphs: distances, hubs, presets") {
  const CouplingGraph t = CouplingGraph::t_tree6();
  CHECK(t.n_nodes() == 6);
  CHECK(t.hub() == 1);
  CHECK(t.degree(1) == 3);
  CHECK(t.adjacent(0, 1));
  CHECK(!t.adjacent(0, 2));
  CHECK(t.distance(2, 5) == 4);  // 2-1-3-4-5
  CHECK(t.distance(0, 0) == 0);
  CHECK(!t.fully_connected());

  const CouplingGraph full = CouplingGraph::full(6);
  CHECK(full.fully_connected());
  CHECK(full.distance(0, 5) == 1);

  const CouplingGraph line = CouplingGraph::line(6);
  CHECK(line.distance(0, 5) == 5);
  CHECK(line.hub() == 1);  // degree two, smallest index

  CHECK(CouplingGraph::preset("lagos_t").edges() == t.edges());
  CHECK(CouplingGraph::preset("full5").n_nodes() == 5);
  CHECK(CouplingGraph::preset("line6").edges() == line.edges());
  CHECK_THROWS_AS(CouplingGraph::preset("ring6"), std::invalid_argument);
}

TEST_CASE("coupling graph json round-trips") {
  const CouplingGraph t = CouplingGraph::t_tree6();
  const CouplingGraph back = CouplingGraph::from_json(t.to_json());
  CHECK(back.n_nodes() == t.n_nodes());
  CHECK(back.edges() == t.edges());
  CHECK_THROWS(CouplingGraph::from_json("{\"n_nodes\": 2}"));
}

TEST_CASE("graph validation rejects bad edges") {
  CHECK_THROWS_AS(CouplingGraph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(CouplingGraph(3, {{1, 1}}), std::invalid_argument);
  // disconnected graphs cannot host routing
  CHECK_THROWS_AS(CouplingGraph(4, {{0, 1}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("full connectivity routes to the unchanged circuit") {
  const Circuit logical = g5_stage();
  const RoutingResult r =
      route(logical, CouplingGraph::full(6), QubitMap::identity(6));
  CHECK(r.swap_count == 0);
  CHECK(r.circuit == logical);
  CHECK(r.final_map == r.initial);
  CHECK(route_for_hardware(logical, CouplingGraph::full(6)) == logical);
}

TEST_CASE("routed circuits touch edges only") {
  const Circuit logical = g5_stage();
  const CouplingGraph t = CouplingGraph::t_tree6();
  const RoutingResult r = route(logical, t, pick_initial_map(logical, t));
  CHECK(r.swap_count > 0);
  for (const Gate& g : r.circuit.gates) {
    REQUIRE(g.arity() <= 2);
    if (g.arity() == 2) CHECK(t.adjacent(g.qubits[0], g.qubits[1]));
  }
  // same once swaps become cx triples
  for (const Gate& g : expand_swaps(r.circuit).gates) {
    CHECK(g.kind != GateKind::swap);
    if (g.arity() == 2) CHECK(t.adjacent(g.qubits[0], g.qubits[1]));
  }
}

TEST_CASE("routing is a permutation rewrite: measured marginal is preserved") {
  const CouplingGraph t = CouplingGraph::t_tree6();
  for (BenchmarkId id : {BenchmarkId::r2g3m3, BenchmarkId::g3m3_then_g2m2}) {
    const BenchmarkCircuits bench = build_benchmark(id, problem);
    for (const StagePlan& s : bench.stages) {
      const OutcomeDistribution logical = measured_distribution(s.circuit);
      const OutcomeDistribution routed = measured_distribution(route_for_hardware(s.circuit, t));
      for (const auto& [bits, p] : logical.probabilities)
        CHECK(routed.at(bits) == doctest::Approx(p).epsilon(1e-12));
    }
  }
}

TEST_CASE("helper wire is pinned to the hub") {
  const Circuit logical = g5_stage();
  const CouplingGraph t = CouplingGraph::t_tree6();
  const QubitMap map = pick_initial_map(logical, t);
  CHECK(map.phys(helper_qubit) == t.hub());
}

TEST_CASE("placement beats the identity map on the tree") {
  const Circuit logical = g5_stage();
  const CouplingGraph t = CouplingGraph::t_tree6();
  const RoutingResult picked = route(logical, t, pick_initial_map(logical, t));
  const RoutingResult naive = route(logical, t, QubitMap::identity(6));
  CHECK(picked.swap_count <= naive.swap_count);
}

TEST_CASE("line topology also routes every benchmark stage") {
  const CouplingGraph line = CouplingGraph::line(6);
  for (BenchmarkId id : all_benchmarks()) {
    const BenchmarkCircuits bench = build_benchmark(id, problem);
    for (const StagePlan& s : bench.stages) {
      const Circuit routed = route_for_hardware(s.circuit, line);
      for (const Gate& g : routed.gates)
        if (g.arity() == 2) CHECK(line.adjacent(g.qubits[0], g.qubits[1]));
    }
  }
}

TEST_CASE("routing result is deterministic") {
  const Circuit logical = g5_stage();
  const CouplingGraph t = CouplingGraph::t_tree6();
  const RoutingResult a = route(logical, t, pick_initial_map(logical, t));
  const RoutingResult b = route(logical, t, pick_initial_map(logical, t));
  CHECK(a.circuit == b.circuit);
  CHECK(a.final_map == b.final_map);
}

TEST_CASE("hardware depth: per-gate count after routing, logical when full") {
  const Circuit logical = g5_stage();
  CHECK(hardware_depth(logical, CouplingGraph::full(6)) == circuit_depth(logical));
  const CouplingGraph t = CouplingGraph::t_tree6();
  const int d = hardware_depth(logical, t);
  CHECK(d == gate_depth(route_for_hardware(logical, t)));
  CHECK(d > circuit_depth(logical));
  // native swaps pack tighter than cx triples
  CHECK(hardware_depth(logical, t, true) < d);
}

TEST_CASE("tree-routed benchmark depths stay in the published bands") {
  const CouplingGraph t = CouplingGraph::t_tree6();
  auto routed_depth = [&](BenchmarkId id) {
    int d = 0;
    for (const StagePlan& s : build_benchmark(id, problem).stages)
      d += hardware_depth(s.circuit, t);
    return d;
  };
  CHECK(routed_depth(BenchmarkId::g5m5) == 115);
  CHECK(routed_depth(BenchmarkId::g5g5m5) == 235);
  CHECK(routed_depth(BenchmarkId::r2g3m3) == 70);
  CHECK(routed_depth(BenchmarkId::r3g2m2) == 39);
  CHECK(routed_depth(BenchmarkId::g2m2_then_g3m3) == 109);
  CHECK(routed_depth(BenchmarkId::g3m3_then_g2m2) == 110);
}

TEST_CASE("route validates its inputs") {
  const CouplingGraph t = CouplingGraph::t_tree6();
  Circuit c(6);
  c.append(make_gate(GateKind::cx, {0, 1}));
  QubitMap bad{{0, 0, 1, 2, 3, 4}};  // not injective
  CHECK_THROWS_AS(route(c, t, bad), std::invalid_argument);
  QubitMap wrong_size{{0, 1, 2}};
  CHECK_THROWS_AS(route(c, t, wrong_size), std::invalid_argument);
  Circuit wide(6);
  wide.append(make_gate(GateKind::mcx, {0, 1, 2}));  // arity three needs decomposition first
  CHECK_THROWS_AS(route(wide, t, QubitMap::identity(6)), std::invalid_argument);
}
