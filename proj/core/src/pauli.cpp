#include "cliffsym/pauli.hpp"

#include <stdexcept>

namespace cliffsym {

int single_qubit_phase_exponent(PauliXZ a, PauliXZ b) {
  if (!a.x && !a.z) return 0;                        // I * b
  if (a.x && a.z) return int(b.x) - int(b.z);        // Y * b
  if (a.x) return b.z ? (b.x ? -1 : 1) : 0;          // X * b
  return b.x ? (b.z ? 1 : -1) : 0;                   // Z * b
}

int row_multiply_into(PauliRow& target, const PauliRow& source) {
  if (target.n_qubits() != source.n_qubits() ||
      target.phase.size() != source.phase.size()) {
    throw std::invalid_argument("row width mismatch");
  }
  int sum = 0;
  for (size_t q = 0; q < target.n_qubits(); ++q) {
    PauliXZ s{source.xs.get(q), source.zs.get(q)};
    PauliXZ t{target.xs.get(q), target.zs.get(q)};
    sum += single_qubit_phase_exponent(s, t);
  }
  target.xs ^= source.xs;
  target.zs ^= source.zs;
  target.phase ^= source.phase;
  int residue = ((sum % 4) + 4) % 4;
  if (residue == 2) target.phase.flip(0);
  return residue;
}

}  // namespace cliffsym
