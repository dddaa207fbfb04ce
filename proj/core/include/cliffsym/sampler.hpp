#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffsym/bit_matrix.hpp"
#include "cliffsym/symbols.hpp"

namespace cliffsym {

// SplitMix64 avalanche step; the basis of the keyed, order-insensitive
// sample streams below.
inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stateless draw keyed by (seed, group, shot): every symbol group gets an
// independent stream, so batches can be filled in any order or in parallel
// without changing the result.
inline uint64_t keyed_draw(uint64_t seed, uint64_t group, uint64_t shot) {
  return mix64(mix64(mix64(seed) ^ group) ^ shot);
}

inline double unit_double(uint64_t u) { return (u >> 11) * 0x1.0p-53; }

// Column j holds the sampled symbol assignment of shot j; row 0 (the
// constant symbol) is all ones.
struct SymbolAssignmentBatch {
  TiledBitMatrix data;  // (n_s + 1) x n_smp

  size_t n_symbols() const { return data.rows(); }
  size_t n_shots() const { return data.cols(); }
};

// Shot table: row k is measurement k, column j is shot j.
struct SampleMatrix {
  TiledBitMatrix data;  // n_m x n_smp
  std::vector<uint32_t> measurement_order;

  size_t n_measurements() const { return data.rows(); }
  size_t n_shots() const { return data.cols(); }
};

// Samples every symbol group per its distribution, independently across
// groups and shots. Identical (seed, registry, n_smp) reproduce the batch
// bit for bit.
SymbolAssignmentBatch draw_assignments(const SymbolRegistry& registry,
                                       size_t n_smp, uint64_t seed);

// Evaluates every expression against every shot column: row k of the result
// is the XOR of the batch rows listed in expressions[k]. Shot blocks of 512
// columns are independent and can be spread over `threads` workers.
SampleMatrix sample(const std::vector<MeasurementExpression>& expressions,
                    const SymbolAssignmentBatch& batch, unsigned threads = 1);

enum class ShotFormat : uint8_t {
  k01,  // one line per shot, '0'/'1' per measurement
  kB8,  // per shot: ceil(n_m/8) bytes, measurement k at bit k%8 of byte k/8
};

std::string encode_shots(const SampleMatrix& m, ShotFormat format);

// Extracts one shot (column) as measurement-ordered bits.
BitVec shot_bits(const SampleMatrix& m, size_t shot);

}  // namespace cliffsym
