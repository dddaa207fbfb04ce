#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffsym/bit_matrix.hpp"
#include "cliffsym/circuit.hpp"
#include "cliffsym/pauli.hpp"
#include "cliffsym/symbols.hpp"

namespace cliffsym {

// Stabilizer tableau with symbolic phases. The backing bit matrix stacks the
// n destabilizer rows above the n stabilizer rows; its columns are the X
// block, the Z block, and one phase column per symbol (column 0 of the phase
// block is the constant term). Each block is padded to a whole number of
// 512-bit tiles so the X/Z kernels stay lane-aligned.
//
// Gates are column operations and need column-major tiles; measurements are
// row operations and need row-major tiles. The orientation is flipped lazily
// on the first operation of the other kind, which is invisible to callers.
class SymbolicTableau {
 public:
  // Initializes |0...0>: destabilizers X_1..X_n, stabilizers Z_1..Z_n, all
  // phases zero.
  SymbolicTableau(size_t n_qubits, size_t symbol_capacity);

  size_t n_qubits() const { return n_; }
  size_t symbol_capacity() const { return symbol_capacity_; }

  void apply_h(uint32_t a);
  void apply_s(uint32_t a);
  void apply_s_dag(uint32_t a);
  void apply_cnot(uint32_t a, uint32_t b);

  // Symbol-conditioned Paulis: XOR the unit vector of symbol `s` into the
  // phase of every row the Pauli anticommutes with. Symbol 0 gives the
  // concrete gate.
  void apply_pauli_x(uint32_t a, uint32_t s);
  void apply_pauli_y(uint32_t a, uint32_t s);
  void apply_pauli_z(uint32_t a, uint32_t s);
  void apply_conditional_pauli(uint32_t a, PauliAxis axis,
                               const MeasurementExpression& e);

  // Measures qubit `a` in the computational basis and returns the outcome as
  // a sparse symbol expression. A random outcome allocates a fresh fair-coin
  // symbol in the registry and stamps it into the new stabilizer row's
  // phase; a determined outcome accumulates stabilizer rows into a scratch
  // row and returns its phase, leaving the tableau untouched.
  MeasurementExpression measure(uint32_t a, SymbolRegistry& registry,
                                size_t instruction_index = 0);

  // Row `i` in [0, 2n): destabilizers first, then stabilizers.
  PauliRow extract_row(size_t i) const;

  // Diagnostic generator listing, one "(-1)^{expr} PAULIS" line per row.
  std::string dump_stabilizers() const;
  std::string dump() const;

  // Test hook: flips one phase bit directly.
  void xor_phase_bit(size_t row, uint32_t symbol);

  // Structural invariants: stabilizers commute pairwise, each destabilizer
  // anticommutes with exactly its partner, and the x/z submatrix has full
  // rank over GF(2).
  bool check_symplectic() const;
  bool check_full_rank() const;

 private:
  void check_qubit(uint32_t a) const;
  void check_symbol(uint32_t s) const;
  size_t col_x(uint32_t q) const { return q; }
  size_t col_z(uint32_t q) const { return x_width_ + q; }
  size_t col_sym(uint32_t s) const { return 2 * x_width_ + s; }
  void ensure_column_order() { mat_.ensure_order(TileOrder::kColumnMajor); }
  void ensure_row_order() { mat_.ensure_order(TileOrder::kRowMajor); }

  // target row := source row * target row, phases included. Returns the
  // i-exponent residue; throws if the product is not Hermitian.
  int rowsum_rows(size_t dst, size_t src);

  size_t n_ = 0;
  size_t symbol_capacity_ = 0;
  size_t x_width_ = 0;  // padded width of each of the X and Z blocks
  TiledBitMatrix mat_;
};

std::string expression_to_string(const MeasurementExpression& e);

// Result of the one-pass circuit traversal: every measurement outcome as a
// symbol expression, plus the registry describing how to sample the symbols.
struct InitResult {
  CircuitSummary summary;
  SymbolRegistry registry;
  std::vector<MeasurementExpression> expressions;
  std::optional<SymbolicTableau> tableau;  // absent for zero-qubit circuits
};

InitResult run_initialization(const std::vector<Instruction>& instructions);

}  // namespace cliffsym
