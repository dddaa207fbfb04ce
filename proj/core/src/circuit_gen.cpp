#include "cliffsym/circuit_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cliffsym {

const char* bench_family_name(BenchFamily f) {
  switch (f) {
    case BenchFamily::kSparseCnot: return "sparse_cnot";
    case BenchFamily::kDenseCnot: return "dense_cnot";
    case BenchFamily::kDenseCnotDepolarize: return "dense_cnot_depolarize";
  }
  return "?";
}

std::vector<Instruction> generate_bench_circuit(BenchFamily family, size_t n,
                                                uint64_t seed, double noise_p) {
  std::mt19937_64 rng(seed);
  std::vector<Instruction> out;
  std::vector<uint32_t> qubits(n);
  std::iota(qubits.begin(), qubits.end(), 0);

  size_t pairs_per_layer =
      family == BenchFamily::kSparseCnot ? std::min<size_t>(5, n / 2) : n / 2;
  size_t measured_per_layer = std::max<size_t>(1, n / 20);

  for (size_t layer = 0; layer < n; ++layer) {
    Instruction h{InstrKind::kH, {}, 0.0, 0};
    Instruction s{InstrKind::kS, {}, 0.0, 0};
    for (uint32_t q = 0; q < n; ++q) {
      switch (rng() % 3) {
        case 0: h.targets.push_back(q); break;
        case 1: s.targets.push_back(q); break;
        default: break;  // identity
      }
    }
    if (!h.targets.empty()) out.push_back(std::move(h));
    if (!s.targets.empty()) out.push_back(std::move(s));

    std::shuffle(qubits.begin(), qubits.end(), rng);
    if (pairs_per_layer > 0) {
      Instruction cx{InstrKind::kCX, {}, 0.0, 0};
      cx.targets.assign(qubits.begin(), qubits.begin() + 2 * pairs_per_layer);
      out.push_back(std::move(cx));
    }

    if (family == BenchFamily::kDenseCnotDepolarize) {
      Instruction dep{InstrKind::kDepolarize1, {}, noise_p, 0};
      dep.targets.resize(n);
      std::iota(dep.targets.begin(), dep.targets.end(), 0);
      out.push_back(std::move(dep));
    }

    Instruction m{InstrKind::kM, {}, 0.0, 0};
    std::shuffle(qubits.begin(), qubits.end(), rng);
    m.targets.assign(qubits.begin(), qubits.begin() + measured_per_layer);
    std::sort(m.targets.begin(), m.targets.end());
    out.push_back(std::move(m));
  }

  Instruction final_m{InstrKind::kM, {}, 0.0, 0};
  final_m.targets.resize(n);
  std::iota(final_m.targets.begin(), final_m.targets.end(), 0);
  out.push_back(std::move(final_m));
  return out;
}

std::vector<Instruction> random_circuit(const RandomCircuitOptions& opt,
                                        uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick_qubit(
      0, static_cast<uint32_t>(opt.n_qubits - 1));
  std::vector<Instruction> out;
  size_t measurements = 0;

  auto rand_p = [&]() {
    static const double choices[] = {0.01, 0.05, 0.1, 0.3, 0.5};
    return choices[rng() % 5];
  };

  for (size_t i = 0; i < opt.n_instructions; ++i) {
    unsigned roll = rng() % 100;
    Instruction inst;
    if (roll < 20) {
      inst.kind = InstrKind::kH;
      inst.targets = {pick_qubit(rng)};
    } else if (roll < 32) {
      inst.kind = InstrKind::kS;
      inst.targets = {pick_qubit(rng)};
    } else if (roll < 38) {
      inst.kind = InstrKind::kSDag;
      inst.targets = {pick_qubit(rng)};
    } else if (roll < 58 && opt.n_qubits >= 2) {
      inst.kind = InstrKind::kCX;
      uint32_t a = pick_qubit(rng), b = pick_qubit(rng);
      while (b == a) b = pick_qubit(rng);
      inst.targets = {a, b};
    } else if (roll < 66) {
      inst.kind = static_cast<InstrKind>(
          static_cast<int>(InstrKind::kX) + static_cast<int>(rng() % 3));
      inst.targets = {pick_qubit(rng)};
    } else if (roll < 78 && measurements < opt.max_measurements) {
      inst.kind = InstrKind::kM;
      inst.targets = {pick_qubit(rng)};
      ++measurements;
    } else if (roll < 84 && opt.with_resets) {
      inst.kind = InstrKind::kR;
      inst.targets = {pick_qubit(rng)};
    } else if (opt.with_noise) {
      unsigned noise_roll = rng() % 5;
      if (noise_roll < 3) {
        inst.kind = noise_roll == 0   ? InstrKind::kXError
                    : noise_roll == 1 ? InstrKind::kYError
                                      : InstrKind::kZError;
        inst.targets = {pick_qubit(rng)};
      } else if (noise_roll == 3 || opt.n_qubits < 2) {
        inst.kind = InstrKind::kDepolarize1;
        inst.targets = {pick_qubit(rng)};
      } else {
        inst.kind = InstrKind::kDepolarize2;
        uint32_t a = pick_qubit(rng), b = pick_qubit(rng);
        while (b == a) b = pick_qubit(rng);
        inst.targets = {a, b};
      }
      inst.param = rand_p();
    } else {
      inst.kind = InstrKind::kH;
      inst.targets = {pick_qubit(rng)};
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace cliffsym
