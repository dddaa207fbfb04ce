#pragma once

#include <cstdint>

#include "cliffsym/bitvec.hpp"

namespace cliffsym {

// Single-qubit Pauli as an (x, z) bit pair: 00=I, 10=X, 01=Z, 11=Y.
struct PauliXZ {
  bool x = false;
  bool z = false;

  bool operator==(const PauliXZ&) const = default;
};

// Exponent g in {-1, 0, 1} normalizing the product of two single-qubit
// Paulis: i^g * sigma(a) * sigma(b) = sigma(a ^ b), where sigma maps bit
// pairs to matrices and a ^ b is the componentwise XOR. For example
// X*Z = -iY gives g(X, Z) = +1 and g(Z, X) = -1.
int single_qubit_phase_exponent(PauliXZ a, PauliXZ b);

// One tableau row: an n-qubit Pauli with a symbolic phase. The phase is a
// bit vector over symbol ids; bit 0 is the constant term.
struct PauliRow {
  BitVec xs;
  BitVec zs;
  BitVec phase;

  PauliRow() = default;
  PauliRow(size_t n_qubits, size_t phase_width)
      : xs(n_qubits), zs(n_qubits), phase(phase_width) {}

  size_t n_qubits() const { return xs.size(); }

  bool operator==(const PauliRow&) const = default;
};

// Multiplies `source` into `target` (target := source * target up to the
// tracked sign): XORs the x/z bits and the symbolic phases, and flips the
// constant phase bit when the accumulated i-exponent is 2 mod 4.
//
// Returns the i-exponent sum mod 4. A valid generator product always yields
// 0 or 2; an odd return value means the caller's tableau is corrupt.
int row_multiply_into(PauliRow& target, const PauliRow& source);

}  // namespace cliffsym
