#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qsearch/circuit.hpp>
#include <qsearch/decompositions.hpp>

#include "oracles.hpp"

using namespace qsearch;

TEST_CASE("toffoli, all-to-all layout: exact, 6 cx, 7 t-like") {
  const Circuit c = build_toffoli(3, 0, 1, 2);
  CHECK(reference::max_abs_diff(unitary_of(c), reference::controlled_x(3, {0, 1}, 2)) < 1e-12);
  const GateCounts counts = count_gates(c);
  CHECK(counts.cx == 6);
  CHECK(counts.t_like == 7);
  CHECK(counts.total == 15);
}

TEST_CASE("toffoli, line layout: exact, 8 cx, chain-adjacent only") {
  const Circuit c = build_toffoli(3, 0, 1, 2, ToffoliLayout::line);
  CHECK(reference::max_abs_diff(unitary_of(c), reference::controlled_x(3, {0, 1}, 2)) < 1e-12);
  const GateCounts counts = count_gates(c);
  CHECK(counts.cx == 8);
  CHECK(counts.t_like == 7);
  for (const Gate& g : c.gates)
    if (g.arity() == 2) {
      const bool on_chain = (g.qubits[0] == 0 && g.qubits[1] == 1) ||
                            (g.qubits[0] == 1 && g.qubits[1] == 2);
      CHECK(on_chain);
    }
}

TEST_CASE("toffoli on permuted wires inside a larger register") {
  const Circuit c = build_toffoli(4, 3, 0, 1);
  CHECK(reference::max_abs_diff(unitary_of(c), reference::controlled_x(4, {3, 0}, 1)) < 1e-12);
}

TEST_CASE("ccc-y block: exact triple-controlled real Y") {
  const Circuit c = build_relative_phase_cccy(4, 0, 1, 2, 3);
  CHECK(reference::max_abs_diff(unitary_of(c), reference::cccy(4, {0, 1, 2}, 3)) < 1e-12);
  const Circuit cd = build_relative_phase_cccy(4, 0, 1, 2, 3, true);
  CHECK(reference::max_abs_diff(unitary_of(cd), reference::cccy(4, {0, 1, 2}, 3).adjoint()) < 1e-12);
}

TEST_CASE("ccc-y interior before the correction acts trivially off the leading pair") {
  Circuit c = build_relative_phase_cccy(4, 0, 1, 2, 3);
  REQUIRE(c.gates.back().tag == cccy_fix_tag);
  c.gates.pop_back();  // bare relative-phase interior
  const Matrix u = unitary_of(c);
  for (std::size_t col = 0; col < 16; ++col) {
    const bool leading_pair = ((col >> 3) & 1u) == 1u && ((col >> 2) & 1u) == 1u;
    if (leading_pair) continue;
    Vector e = Vector::Zero(16);
    e(static_cast<Eigen::Index>(col)) = 1.0;
    CHECK((u * e - e).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("ccc-y correction placement: one tagged diagonal gate") {
  const Circuit c = build_relative_phase_cccy(4, 0, 1, 2, 3);
  int tagged = 0;
  for (const Gate& g : c.gates)
    if (g.tag == cccy_fix_tag) {
      tagged += 1;
      CHECK(g.kind == GateKind::cu1q);
    }
  CHECK(tagged == 1);
  CHECK(c.gates.size() == 19);
}

TEST_CASE("five-control x, relative-phase variant: exact with a clean helper") {
  const Circuit c = build_mcx5(6, {0, 1, 2, 3}, 4, 5);
  const Matrix u = unitary_of(c);
  const Matrix expect = reference::controlled_x(6, {0, 1, 2, 3}, 4);
  // all 32 data inputs with the helper cleared: exact action, helper back to 0
  for (std::size_t data = 0; data < 32; ++data) {
    const std::size_t col = data << 1;
    Vector e = Vector::Zero(64);
    e(static_cast<Eigen::Index>(col)) = 1.0;
    CHECK(((u - expect) * e).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("five-control x, full variant: exact with a clean helper") {
  const Circuit c = build_mcx5(6, {0, 1, 2, 3}, 4, 5, Mcx5Variant::full);
  const Matrix u = unitary_of(c);
  const Matrix expect = reference::controlled_x(6, {0, 1, 2, 3}, 4);
  for (std::size_t data = 0; data < 32; ++data) {
    Vector e = Vector::Zero(64);
    e(static_cast<Eigen::Index>(data << 1)) = 1.0;
    CHECK(((u - expect) * e).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("five-control x depth: 34 relative-phase, 53 full") {
  const Circuit rp = build_mcx5(6, {0, 1, 2, 3}, 4, 5);
  const Circuit full = build_mcx5(6, {0, 1, 2, 3}, 4, 5, Mcx5Variant::full);
  CHECK(circuit_depth(rp) == 34);
  CHECK(circuit_depth(full) == 53);
  // corrections must have cancelled in the relative-phase assembly
  for (const Gate& g : rp.gates) CHECK(g.tag.empty());
}

TEST_CASE("quadruple-controlled x: exact, 14 cx") {
  const Circuit c = build_c3x(4, 0, 1, 2, 3);
  CHECK(reference::max_abs_diff(unitary_of(c), reference::controlled_x(4, {0, 1, 2}, 3)) < 1e-12);
  CHECK(count_gates(c).cx == 14);
  CHECK(circuit_depth(c) == 27);
}

TEST_CASE("mcx5 helper stays clean for every data input") {
  const Circuit c = build_mcx5(6, {0, 1, 2, 3}, 4, 5);
  const Matrix u = unitary_of(c);
  for (std::size_t data = 0; data < 32; ++data) {
    Vector e = Vector::Zero(64);
    e(static_cast<Eigen::Index>(data << 1)) = 1.0;
    const Vector out = u * e;
    double helper_one = 0.0;
    for (std::size_t i = 1; i < 64; i += 2) helper_one += std::norm(out(static_cast<Eigen::Index>(i)));
    CHECK(helper_one < 1e-20);
  }
}
