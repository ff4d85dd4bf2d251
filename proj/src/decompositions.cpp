#include "qsearch/decompositions.hpp"

#include <stdexcept>

namespace qsearch {
namespace {

Gate g1(GateKind k, int q) { return make_gate(k, {q}); }
Gate cx(int c, int t) { return make_gate(GateKind::cx, {c, t}); }

}  // namespace

Circuit build_toffoli(int n_qubits, int a, int b, int target, ToffoliLayout layout) {
  Circuit c(n_qubits);
  if (layout == ToffoliLayout::all_to_all) {
    c.append(g1(GateKind::h, target));
    c.append(cx(b, target));
    c.append(g1(GateKind::tdg, target));
    c.append(cx(a, target));
    c.append(g1(GateKind::t, target));
    c.append(cx(b, target));
    c.append(g1(GateKind::tdg, target));
    c.append(cx(a, target));
    c.append(g1(GateKind::t, b));
    c.append(g1(GateKind::t, target));
    c.append(g1(GateKind::h, target));
    c.append(cx(a, b));
    c.append(g1(GateKind::t, a));
    c.append(g1(GateKind::tdg, b));
    c.append(cx(a, b));
    return c;
  }
  // phase-polynomial form walking parities along the chain a - b - target
  c.append(g1(GateKind::h, target));
  c.append(g1(GateKind::t, a));
  c.append(g1(GateKind::t, b));
  c.append(g1(GateKind::t, target));
  c.append(cx(a, b));
  c.append(g1(GateKind::tdg, b));
  c.append(cx(b, target));
  c.append(g1(GateKind::t, target));
  c.append(cx(a, b));
  c.append(cx(b, target));
  c.append(g1(GateKind::tdg, target));
  c.append(cx(a, b));
  c.append(cx(b, target));
  c.append(g1(GateKind::tdg, target));
  c.append(cx(a, b));
  c.append(cx(b, target));
  c.append(g1(GateKind::h, target));
  return c;
}

Circuit build_relative_phase_cccy(int n_qubits, int c1, int c2, int c3, int target,
                                  bool dagger) {
  Circuit c(n_qubits);
  c.append(g1(GateKind::h, target));
  c.append(g1(GateKind::t, target));
  c.append(cx(c3, target));
  c.append(g1(GateKind::tdg, target));
  c.append(g1(GateKind::h, target));
  c.append(cx(c1, target));
  c.append(g1(GateKind::t, target));
  c.append(cx(c2, target));
  c.append(g1(GateKind::tdg, target));
  c.append(cx(c1, target));
  c.append(g1(GateKind::t, target));
  c.append(cx(c2, target));
  c.append(g1(GateKind::tdg, target));
  c.append(g1(GateKind::h, target));
  c.append(g1(GateKind::t, target));
  c.append(cx(c3, target));
  c.append(g1(GateKind::tdg, target));
  c.append(g1(GateKind::h, target));
  // the interior above equals ccc-y except for a +iZ kick on the control
  // pattern (1,1,0); this diagonal correction restores exactness and can
  // cancel against its mirror image in compute/uncompute use
  Matrix2 fix;
  fix << Complex(0.0, -1.0), 0.0, 0.0, Complex(0.0, 1.0);
  c.append(make_cu1q({c1, c2, c3}, target, fix, /*open_controls=*/0b100, cccy_fix_tag));
  return dagger ? c.dagger() : c;
}

Circuit build_c3x(int n_qubits, int c1, int c2, int c3, int target) {
  const double theta = pi / 8.0;
  Matrix2 plus, minus;
  plus << 1.0, 0.0, 0.0, std::polar(1.0, theta);
  minus << 1.0, 0.0, 0.0, std::polar(1.0, -theta);
  const int a = c1, b = c2, d = c3, t = target;
  Circuit c(n_qubits);
  c.append(g1(GateKind::h, t));
  c.append(make_u1q(a, plus));
  c.append(make_u1q(b, plus));
  c.append(make_u1q(d, plus));
  c.append(make_u1q(t, plus));
  c.append(cx(a, b));
  c.append(make_u1q(b, minus));
  c.append(cx(a, b));
  c.append(cx(b, d));
  c.append(make_u1q(d, minus));
  c.append(cx(a, d));
  c.append(make_u1q(d, plus));
  c.append(cx(b, d));
  c.append(make_u1q(d, minus));
  c.append(cx(a, d));
  c.append(cx(d, t));
  c.append(make_u1q(t, minus));
  c.append(cx(b, t));
  c.append(make_u1q(t, plus));
  c.append(cx(d, t));
  c.append(make_u1q(t, minus));
  c.append(cx(a, t));
  c.append(make_u1q(t, plus));
  c.append(cx(d, t));
  c.append(make_u1q(t, minus));
  c.append(cx(b, t));
  c.append(make_u1q(t, plus));
  c.append(cx(d, t));
  c.append(make_u1q(t, minus));
  c.append(cx(a, t));
  c.append(g1(GateKind::h, t));
  return c;
}

Circuit build_mcx5(int n_qubits, const std::vector<int>& controls, int target, int helper,
                   Mcx5Variant variant) {
  if (controls.size() != 4) throw std::invalid_argument("mcx5 takes exactly four controls");
  Circuit c(n_qubits);
  c.ancillas = {helper};
  const int c1 = controls[0], c2 = controls[1], c3 = controls[2], c4 = controls[3];
  if (variant == Mcx5Variant::relative_phase) {
    c.append(build_relative_phase_cccy(n_qubits, c1, c2, c3, helper, false));
    c.append(build_toffoli(n_qubits, helper, c4, target));
    c.append(build_relative_phase_cccy(n_qubits, c1, c2, c3, helper, true));
    return elide_tagged_pairs(c, cccy_fix_tag);
  }
  c.append(build_c3x(n_qubits, c1, c2, c3, helper));
  c.append(build_toffoli(n_qubits, helper, c4, target));
  c.append(build_c3x(n_qubits, c1, c2, c3, helper));
  return c;
}

}  // namespace qsearch
