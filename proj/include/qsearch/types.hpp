#pragma once

// Shared scalar/matrix aliases and basis-index bit helpers.
// Convention used everywhere: qubit 0 is the most significant bit of a
// computational-basis index, so |q0 q1 ... q_{n-1}> maps to the integer
// whose binary expansion reads left to right.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsearch {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double pi = 3.14159265358979323846;

inline std::size_t dim_of(int n_qubits) {
  if (n_qubits < 0 || n_qubits > 30)
    throw std::invalid_argument("qubit count out of range");
  return std::size_t{1} << n_qubits;
}

// value of qubit q in basis index i, with qubit 0 as the MSB
inline int bit_of(std::size_t index, int qubit, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
}

inline std::size_t with_bit(std::size_t index, int qubit, int n_qubits, int value) {
  const std::size_t mask = std::size_t{1} << (n_qubits - 1 - qubit);
  return value ? (index | mask) : (index & ~mask);
}

// parse a bitstring like "01011" into a basis index (first char = qubit 0)
inline std::size_t index_of_bits(const std::string& bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must be 0/1");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return index;
}

inline std::string bits_of_index(std::size_t index, int n_qubits) {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q)
    out[static_cast<std::size_t>(q)] = static_cast<char>('0' + bit_of(index, q, n_qubits));
  return out;
}

// sub-index of the listed qubits inside a full basis index; qubits[0]
// becomes the MSB of the result, matching the global ordering rule
inline std::size_t sub_index_of(std::size_t index, const std::vector<int>& qubits, int n_qubits) {
  std::size_t sub = 0;
  for (int q : qubits) sub = (sub << 1) | static_cast<std::size_t>(bit_of(index, q, n_qubits));
  return sub;
}

template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qsearch
