#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsym/symbols.hpp"

namespace cliffsym {

enum class InstrKind : uint8_t {
  kH,
  kS,
  kSDag,
  kX,
  kY,
  kZ,
  kCX,
  kM,
  kR,
  kXError,
  kYError,
  kZError,
  kDepolarize1,
  kDepolarize2,
  kTick,
};

bool is_noise(InstrKind k);
bool is_two_qubit(InstrKind k);
std::string_view instr_name(InstrKind k);

struct Instruction {
  InstrKind kind = InstrKind::kTick;
  std::vector<uint32_t> targets;
  double param = 0.0;   // probability, noise kinds only
  size_t line = 0;      // 1-based source line, 0 when synthesized
};

struct ParseError : std::runtime_error {
  ParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  size_t line;
};

// Parses the newline-delimited circuit text format:
//   NAME ['(' PROB ')'] TARGET...
// Names are case-insensitive; CNOT is an alias of CX and MZ of M. '#' starts
// a comment. Probabilities are required on noise instructions and rejected
// elsewhere. CX and DEPOLARIZE2 take an even number of targets read pairwise,
// with distinct qubits inside each pair. TICK takes no targets.
std::vector<Instruction> parse_circuit(std::string_view text);

// Canonical form: upper-case names, single spaces, shortest round-trip
// probability. parse(print(parse(t))) == parse(t).
std::string print_circuit(const std::vector<Instruction>& instructions);

struct GroupSpec {
  GroupDistribution distribution;
  double param;
  uint32_t arity;
};

struct CircuitSummary {
  size_t n_qubits = 0;
  size_t n_measurements = 0;
  size_t n_resets = 0;
  size_t n_fault_symbols = 0;
  std::vector<GroupSpec> symbol_groups;

  // Enough phase columns for the constant, every fault symbol, and one coin
  // per measurement or reset.
  size_t symbol_capacity() const {
    return 1 + n_fault_symbols + n_measurements + n_resets;
  }
};

CircuitSummary summarize(const std::vector<Instruction>& instructions);

enum class PauliAxis : uint8_t { kX, kY, kZ };

// One conditioned single-qubit Pauli produced by lowering a noise channel.
struct SymbolicPauliApplication {
  uint32_t qubit;
  PauliAxis axis;
  uint32_t symbol;
};

// Decomposes one noise instruction into symbol-conditioned X/Z applications,
// allocating the fault symbols in the registry:
//   X_ERROR(p) q    -> X^s on q,           s ~ Bernoulli(p)
//   Z_ERROR(p) q    -> Z^s on q
//   Y_ERROR(p) q    -> X^s Z^s on q (one shared symbol)
//   DEPOLARIZE1(p)  -> X^s1 Z^s2, (s1,s2) jointly (1-p, p/3, p/3, p/3)
//   DEPOLARIZE2(p)  -> X/Z pairs on both qubits, 4 symbols, identity 1-p and
//                      each of the 15 other patterns p/15
std::vector<SymbolicPauliApplication> decompose_noise(
    const Instruction& inst, size_t instruction_index, SymbolRegistry& registry);

}  // namespace cliffsym
