#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cliffsym/bitvec.hpp"
#include "cliffsym/circuit.hpp"

namespace cliffsym {

// Plain-bit stabilizer tableau with concrete +/-1 phases. This is a test
// oracle: it favors obvious loops over packed kernels and shares no code
// with the optimized simulator.
class ConcreteTableau {
 public:
  explicit ConcreteTableau(size_t n_qubits);

  size_t n_qubits() const { return n_; }

  void apply_h(uint32_t a);
  void apply_s(uint32_t a);
  void apply_s_dag(uint32_t a);
  void apply_cnot(uint32_t a, uint32_t b);
  void apply_x(uint32_t a);
  void apply_y(uint32_t a);
  void apply_z(uint32_t a);

  // Measures qubit a. A random outcome consumes `coin`; a determined outcome
  // ignores it.
  bool measure(uint32_t a, bool coin);
  bool is_deterministic(uint32_t a) const;

 private:
  void rowsum(size_t h, size_t i);
  int g_exponent(size_t h, size_t i) const;

  size_t n_;
  // Rows 0..n-1 destabilizers, n..2n-1 stabilizers.
  std::vector<std::vector<uint8_t>> xs_, zs_;
  std::vector<uint8_t> r_;
};

// Re-simulates the circuit once per shot with concrete Pauli faults.
// `forced` pins every symbol: fault symbols by registry order, measurement
// coins in allocation order (ids must line up with the symbolic pass, which
// they do because the branch structure is phase-independent). Without
// `forced`, faults and coins are drawn from `rng`.
struct ConcreteShot {
  std::vector<uint8_t> measurements;
  size_t symbols_consumed = 0;
};

ConcreteShot run_concrete_shot(const std::vector<Instruction>& instructions,
                               const BitVec* forced, std::mt19937_64& rng);

// Shot-major outcome bits from repeated concrete simulation.
std::vector<std::vector<uint8_t>> run_concrete(
    const std::vector<Instruction>& instructions, uint64_t seed, size_t shots);

// Dense state-vector simulation (n <= 12, noiseless circuits only): exact
// joint distribution over all recorded measurement outcomes, keyed by the
// '0'/'1' outcome string in measurement order.
std::map<std::string, double> exact_distribution(
    const std::vector<Instruction>& instructions);

}  // namespace cliffsym
