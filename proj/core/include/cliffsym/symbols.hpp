#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cliffsym/bitvec.hpp"

namespace cliffsym {

enum class SymbolKind : uint8_t {
  kConstant,                // symbol 0, always evaluates to 1
  kFault,                   // introduced by a noise instruction
  kMeasurementRandomness,   // fair coin introduced by a random measurement
};

// How the symbols of one group are jointly distributed when sampled.
enum class GroupDistribution : uint8_t {
  kConstantOne,     // the constant symbol
  kBernoulli,       // one symbol, P(1) = param
  kFairCoin,        // one symbol, P(1) = 1/2
  kDepolarize1,     // two symbols (x, z): P(00)=1-p, others p/3
  kDepolarize2,     // four symbols (x1, z1, x2, z2): identity 1-p, others p/15
};

struct SymbolOrigin {
  SymbolKind kind = SymbolKind::kConstant;
  size_t instruction_index = 0;
  uint32_t group_id = 0;
};

// One jointly-sampled set of symbols: a noise instruction contributes one
// group per decomposed channel, a random measurement contributes a
// single-symbol fair-coin group.
struct SymbolGroup {
  GroupDistribution distribution = GroupDistribution::kConstantOne;
  double param = 0.0;
  uint32_t first_symbol = 0;
  uint32_t arity = 1;
  size_t instruction_index = 0;
};

// Allocation log for bit-symbols. Entry 0 is the constant symbol; fault and
// randomness symbols are appended in circuit traversal order, so ids are
// dense and reproducible.
class SymbolRegistry {
 public:
  SymbolRegistry() {
    origins_.push_back(SymbolOrigin{});
    groups_.push_back(SymbolGroup{});
  }

  size_t size() const { return origins_.size(); }
  size_t group_count() const { return groups_.size(); }

  const SymbolOrigin& origin(uint32_t id) const { return origins_.at(id); }
  const SymbolGroup& group(uint32_t gid) const { return groups_.at(gid); }
  std::span<const SymbolGroup> groups() const { return groups_; }

  // Registers a jointly-sampled fault group and returns the first symbol id.
  uint32_t add_fault_group(GroupDistribution dist, double param, uint32_t arity,
                           size_t instruction_index) {
    uint32_t gid = static_cast<uint32_t>(groups_.size());
    uint32_t first = static_cast<uint32_t>(origins_.size());
    groups_.push_back(SymbolGroup{dist, param, first, arity, instruction_index});
    for (uint32_t i = 0; i < arity; ++i) {
      origins_.push_back(SymbolOrigin{SymbolKind::kFault, instruction_index, gid});
    }
    return first;
  }

  uint32_t add_measurement_symbol(size_t instruction_index) {
    uint32_t gid = static_cast<uint32_t>(groups_.size());
    uint32_t id = static_cast<uint32_t>(origins_.size());
    groups_.push_back(SymbolGroup{GroupDistribution::kFairCoin, 0.5, id, 1,
                                  instruction_index});
    origins_.push_back(
        SymbolOrigin{SymbolKind::kMeasurementRandomness, instruction_index, gid});
    return id;
  }

 private:
  std::vector<SymbolOrigin> origins_;
  std::vector<SymbolGroup> groups_;
};

// One measurement outcome as a sparse XOR of symbols: the outcome bit is the
// XOR of the assignment bits of `symbols` (id 0 contributes a constant 1).
struct MeasurementExpression {
  std::vector<uint32_t> symbols;  // strictly increasing

  bool evaluate(const BitVec& assignment) const {
    bool v = false;
    for (uint32_t s : symbols) v ^= assignment.get(s);
    return v;
  }

  bool operator==(const MeasurementExpression&) const = default;
};

}  // namespace cliffsym
