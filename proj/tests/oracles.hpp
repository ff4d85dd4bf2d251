#pragma once

// Reference constructions assembled directly from dense kronecker products
// and basis-index permutations. Nothing here reuses the library's gate or
// circuit machinery, so every comparison crosses two independent paths.

#include <qsearch/types.hpp>

#include <vector>

namespace reference {

using qsearch::Complex;
using qsearch::Matrix;

inline Matrix identity(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  return Matrix::Identity(d, d);
}

// lift a 2^k x 2^k matrix onto the listed wires (wires[0] = block MSB)
inline Matrix embed(const Matrix& u, const std::vector<int>& wires, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const int k = static_cast<int>(wires.size());
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t sub_col = 0;
    for (int w : wires) sub_col = (sub_col << 1) | ((col >> (n_qubits - 1 - w)) & 1u);
    for (std::size_t sub_row = 0; sub_row < (std::size_t{1} << k); ++sub_row) {
      std::size_t row = col;
      for (int i = 0; i < k; ++i) {
        const std::size_t mask = std::size_t{1} << (n_qubits - 1 - wires[static_cast<std::size_t>(i)]);
        if ((sub_row >> (k - 1 - i)) & 1u) row |= mask;
        else row &= ~mask;
      }
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
          u(static_cast<Eigen::Index>(sub_row), static_cast<Eigen::Index>(sub_col));
    }
  }
  return out;
}

// multi-controlled X as a plain basis permutation
inline Matrix controlled_x(int n_qubits, const std::vector<int>& controls, int target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    bool fire = true;
    for (int c : controls) fire = fire && (((col >> (n_qubits - 1 - c)) & 1u) == 1u);
    const std::size_t row = fire ? col ^ (std::size_t{1} << (n_qubits - 1 - target)) : col;
    out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return out;
}

// I - 2 |index><index|
inline Matrix flip_one(int n_qubits, std::size_t index) {
  Matrix out = identity(n_qubits);
  out(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = -1.0;
  return out;
}

// I - 2 |s><s| over the uniform superposition
inline Matrix diffusion(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  const double inv = 1.0 / static_cast<double>(d);
  return Matrix::Identity(d, d) - 2.0 * inv * Matrix::Ones(d, d);
}

// triple-controlled Y in the real convention (|0> -> -|1>, |1> -> |0>)
inline Matrix cccy(int n_qubits, const std::vector<int>& controls, int target) {
  Matrix y(2, 2);
  y << 0.0, 1.0, -1.0, 0.0;
  const std::size_t dim = std::size_t{1} << n_qubits;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    bool fire = true;
    for (int c : controls) fire = fire && (((col >> (n_qubits - 1 - c)) & 1u) == 1u);
    if (!fire) {
      out(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = 1.0;
      continue;
    }
    const std::size_t mask = std::size_t{1} << (n_qubits - 1 - target);
    const int bit = (col & mask) ? 1 : 0;
    for (int r = 0; r < 2; ++r) {
      const std::size_t row = r ? (col | mask) : (col & ~mask);
      if (y(r, bit) != 0.0)
        out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = y(r, bit);
    }
  }
  return out;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace reference
