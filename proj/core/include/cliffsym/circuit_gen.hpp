#pragma once

#include <cstdint>
#include <vector>

#include "cliffsym/circuit.hpp"

namespace cliffsym {

// Layered random interaction circuits for the bench command: n qubits, n
// layers; every layer applies a random choice of H/S/I to each qubit, a set
// of random disjoint CNOT pairs, and measures 5% of the qubits; every qubit
// is measured once more at the end.
enum class BenchFamily : uint8_t {
  kSparseCnot,           // 5 CNOT pairs per layer
  kDenseCnot,            // floor(n/2) CNOT pairs per layer
  kDenseCnotDepolarize,  // dense CNOTs plus single-qubit depolarizing noise
};

const char* bench_family_name(BenchFamily f);

std::vector<Instruction> generate_bench_circuit(BenchFamily family, size_t n,
                                                uint64_t seed,
                                                double noise_p = 1e-3);

// Random mixed circuits for randomized tests.
struct RandomCircuitOptions {
  size_t n_qubits = 4;
  size_t n_instructions = 40;
  size_t max_measurements = static_cast<size_t>(-1);
  bool with_noise = true;
  bool with_resets = true;
};

std::vector<Instruction> random_circuit(const RandomCircuitOptions& opt,
                                        uint64_t seed);

}  // namespace cliffsym
