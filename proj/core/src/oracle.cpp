#include "cliffsym/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffsym {

ConcreteTableau::ConcreteTableau(size_t n_qubits) : n_(n_qubits) {
  if (n_ == 0) throw std::invalid_argument("tableau needs at least one qubit");
  xs_.assign(2 * n_, std::vector<uint8_t>(n_, 0));
  zs_.assign(2 * n_, std::vector<uint8_t>(n_, 0));
  r_.assign(2 * n_, 0);
  for (size_t i = 0; i < n_; ++i) {
    xs_[i][i] = 1;
    zs_[n_ + i][i] = 1;
  }
}

void ConcreteTableau::apply_h(uint32_t a) {
  for (size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i][a] & zs_[i][a];
    std::swap(xs_[i][a], zs_[i][a]);
  }
}

void ConcreteTableau::apply_s(uint32_t a) {
  for (size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i][a] & zs_[i][a];
    zs_[i][a] ^= xs_[i][a];
  }
}

void ConcreteTableau::apply_s_dag(uint32_t a) {
  for (size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i][a] & (zs_[i][a] ^ 1);
    zs_[i][a] ^= xs_[i][a];
  }
}

void ConcreteTableau::apply_cnot(uint32_t a, uint32_t b) {
  for (size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i][a] & zs_[i][b] & (xs_[i][b] ^ zs_[i][a] ^ 1);
    xs_[i][b] ^= xs_[i][a];
    zs_[i][a] ^= zs_[i][b];
  }
}

void ConcreteTableau::apply_x(uint32_t a) {
  for (size_t i = 0; i < 2 * n_; ++i) r_[i] ^= zs_[i][a];
}

void ConcreteTableau::apply_y(uint32_t a) {
  for (size_t i = 0; i < 2 * n_; ++i) r_[i] ^= xs_[i][a] ^ zs_[i][a];
}

void ConcreteTableau::apply_z(uint32_t a) {
  for (size_t i = 0; i < 2 * n_; ++i) r_[i] ^= xs_[i][a];
}

int ConcreteTableau::g_exponent(size_t h, size_t i) const {
  int sum = 0;
  for (size_t j = 0; j < n_; ++j) {
    int x1 = xs_[i][j], z1 = zs_[i][j];
    int x2 = xs_[h][j], z2 = zs_[h][j];
    if (x1 == 0 && z1 == 0) continue;
    if (x1 == 1 && z1 == 1) {
      sum += z2 - x2;
    } else if (x1 == 1) {
      sum += z2 * (2 * x2 - 1);
    } else {
      sum += x2 * (1 - 2 * z2);
    }
  }
  return sum;
}

void ConcreteTableau::rowsum(size_t h, size_t i) {
  int sum = 2 * r_[h] + 2 * r_[i] + g_exponent(h, i);
  int residue = ((sum % 4) + 4) % 4;
  if (residue != 0 && residue != 2) {
    throw std::logic_error("non-hermitian product in concrete tableau");
  }
  r_[h] = residue == 2;
  for (size_t j = 0; j < n_; ++j) {
    xs_[h][j] ^= xs_[i][j];
    zs_[h][j] ^= zs_[i][j];
  }
}

bool ConcreteTableau::is_deterministic(uint32_t a) const {
  for (size_t p = n_; p < 2 * n_; ++p) {
    if (xs_[p][a]) return false;
  }
  return true;
}

bool ConcreteTableau::measure(uint32_t a, bool coin) {
  size_t pivot = 2 * n_;
  for (size_t p = n_; p < 2 * n_; ++p) {
    if (xs_[p][a]) {
      pivot = p;
      break;
    }
  }

  if (pivot < 2 * n_) {
    for (size_t i = 0; i < 2 * n_; ++i) {
      if (i == pivot || i + n_ == pivot) continue;
      if (xs_[i][a]) rowsum(i, pivot);
    }
    xs_[pivot - n_] = xs_[pivot];
    zs_[pivot - n_] = zs_[pivot];
    r_[pivot - n_] = r_[pivot];
    std::fill(xs_[pivot].begin(), xs_[pivot].end(), 0);
    std::fill(zs_[pivot].begin(), zs_[pivot].end(), 0);
    zs_[pivot][a] = 1;
    r_[pivot] = coin;
    return coin;
  }

  // Determined: accumulate into a scratch row.
  std::vector<uint8_t> sx(n_, 0), sz(n_, 0);
  int phase2 = 0;  // phase exponent of i, mod 4
  for (size_t i = 0; i < n_; ++i) {
    if (!xs_[i][a]) continue;
    size_t h = n_ + i;
    int sum = 2 * r_[h];
    for (size_t j = 0; j < n_; ++j) {
      int x1 = xs_[h][j], z1 = zs_[h][j];
      int x2 = sx[j], z2 = sz[j];
      if (x1 == 0 && z1 == 0) continue;
      if (x1 == 1 && z1 == 1) {
        sum += z2 - x2;
      } else if (x1 == 1) {
        sum += z2 * (2 * x2 - 1);
      } else {
        sum += x2 * (1 - 2 * z2);
      }
    }
    phase2 = ((phase2 + sum) % 4 + 4) % 4;
    for (size_t j = 0; j < n_; ++j) {
      sx[j] ^= xs_[h][j];
      sz[j] ^= zs_[h][j];
    }
  }
  if (phase2 != 0 && phase2 != 2) {
    throw std::logic_error("determined outcome with odd phase");
  }
  return phase2 == 2;
}

namespace {

size_t qubit_count(const std::vector<Instruction>& instructions) {
  size_t n = 0;
  for (const auto& inst : instructions) {
    for (uint32_t t : inst.targets) n = std::max<size_t>(n, size_t{t} + 1);
  }
  return n;
}

}  // namespace

ConcreteShot run_concrete_shot(const std::vector<Instruction>& instructions,
                               const BitVec* forced, std::mt19937_64& rng) {
  ConcreteShot shot;
  size_t n = qubit_count(instructions);
  if (n == 0) return shot;

  ConcreteTableau t(n);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  size_t next_symbol = 1;

  auto take_bernoulli = [&](double p) {
    bool b = forced ? forced->get(next_symbol) : (uni(rng) < p);
    ++next_symbol;
    return b;
  };
  auto take_coin = [&]() {
    bool b = forced ? forced->get(next_symbol) : ((rng() & 1) != 0);
    ++next_symbol;
    return b;
  };

  auto measure_qubit = [&](uint32_t q) {
    bool coin = t.is_deterministic(q) ? false : take_coin();
    return t.measure(q, coin);
  };

  for (const auto& inst : instructions) {
    switch (inst.kind) {
      case InstrKind::kH:
        for (uint32_t q : inst.targets) t.apply_h(q);
        break;
      case InstrKind::kS:
        for (uint32_t q : inst.targets) t.apply_s(q);
        break;
      case InstrKind::kSDag:
        for (uint32_t q : inst.targets) t.apply_s_dag(q);
        break;
      case InstrKind::kX:
        for (uint32_t q : inst.targets) t.apply_x(q);
        break;
      case InstrKind::kY:
        for (uint32_t q : inst.targets) t.apply_y(q);
        break;
      case InstrKind::kZ:
        for (uint32_t q : inst.targets) t.apply_z(q);
        break;
      case InstrKind::kCX:
        for (size_t i = 0; i + 1 < inst.targets.size(); i += 2) {
          t.apply_cnot(inst.targets[i], inst.targets[i + 1]);
        }
        break;
      case InstrKind::kM:
        for (uint32_t q : inst.targets) {
          shot.measurements.push_back(measure_qubit(q) ? 1 : 0);
        }
        break;
      case InstrKind::kR:
        for (uint32_t q : inst.targets) {
          if (measure_qubit(q)) t.apply_x(q);
        }
        break;
      case InstrKind::kXError:
        for (uint32_t q : inst.targets) {
          if (take_bernoulli(inst.param)) t.apply_x(q);
        }
        break;
      case InstrKind::kZError:
        for (uint32_t q : inst.targets) {
          if (take_bernoulli(inst.param)) t.apply_z(q);
        }
        break;
      case InstrKind::kYError:
        for (uint32_t q : inst.targets) {
          if (take_bernoulli(inst.param)) t.apply_y(q);
        }
        break;
      case InstrKind::kDepolarize1:
        for (uint32_t q : inst.targets) {
          bool bx, bz;
          if (forced) {
            bx = forced->get(next_symbol);
            bz = forced->get(next_symbol + 1);
          } else {
            double v = uni(rng);
            int pattern = 0;
            if (v >= 1.0 - inst.param) {
              pattern = 1 + std::min(2, static_cast<int>((v - (1.0 - inst.param)) /
                                                         inst.param * 3.0));
            }
            bx = pattern & 1;
            bz = (pattern >> 1) & 1;
          }
          next_symbol += 2;
          if (bx) t.apply_x(q);
          if (bz) t.apply_z(q);
        }
        break;
      case InstrKind::kDepolarize2:
        for (size_t i = 0; i + 1 < inst.targets.size(); i += 2) {
          uint8_t bits = 0;
          if (forced) {
            for (uint32_t b = 0; b < 4; ++b) {
              bits |= static_cast<uint8_t>(forced->get(next_symbol + b)) << b;
            }
          } else {
            double v = uni(rng);
            if (v >= 1.0 - inst.param) {
              bits = static_cast<uint8_t>(
                  1 + std::min(14, static_cast<int>((v - (1.0 - inst.param)) /
                                                    inst.param * 15.0)));
            }
          }
          next_symbol += 4;
          if (bits & 1) t.apply_x(inst.targets[i]);
          if (bits & 2) t.apply_z(inst.targets[i]);
          if (bits & 4) t.apply_x(inst.targets[i + 1]);
          if (bits & 8) t.apply_z(inst.targets[i + 1]);
        }
        break;
      case InstrKind::kTick:
        break;
    }
  }
  shot.symbols_consumed = next_symbol;
  return shot;
}

std::vector<std::vector<uint8_t>> run_concrete(
    const std::vector<Instruction>& instructions, uint64_t seed, size_t shots) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<uint8_t>> out;
  out.reserve(shots);
  for (size_t i = 0; i < shots; ++i) {
    out.push_back(run_concrete_shot(instructions, nullptr, rng).measurements);
  }
  return out;
}

namespace {

using State = std::vector<std::complex<double>>;

struct AtomicOp {
  InstrKind kind;
  uint32_t a = 0, b = 0;
};

void apply_gate(State& s, const AtomicOp& op, size_t n) {
  size_t dim = s.size();
  (void)n;
  switch (op.kind) {
    case InstrKind::kH: {
      size_t bit = size_t{1} << op.a;
      double inv = 1.0 / std::sqrt(2.0);
      for (size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        auto a0 = s[i], a1 = s[i | bit];
        s[i] = (a0 + a1) * inv;
        s[i | bit] = (a0 - a1) * inv;
      }
      break;
    }
    case InstrKind::kS: {
      size_t bit = size_t{1} << op.a;
      for (size_t i = 0; i < dim; ++i) {
        if (i & bit) s[i] *= std::complex<double>(0, 1);
      }
      break;
    }
    case InstrKind::kSDag: {
      size_t bit = size_t{1} << op.a;
      for (size_t i = 0; i < dim; ++i) {
        if (i & bit) s[i] *= std::complex<double>(0, -1);
      }
      break;
    }
    case InstrKind::kX: {
      size_t bit = size_t{1} << op.a;
      for (size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) std::swap(s[i], s[i | bit]);
      }
      break;
    }
    case InstrKind::kY: {
      size_t bit = size_t{1} << op.a;
      for (size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        auto a0 = s[i], a1 = s[i | bit];
        s[i] = std::complex<double>(0, -1) * a1;
        s[i | bit] = std::complex<double>(0, 1) * a0;
      }
      break;
    }
    case InstrKind::kZ: {
      size_t bit = size_t{1} << op.a;
      for (size_t i = 0; i < dim; ++i) {
        if (i & bit) s[i] = -s[i];
      }
      break;
    }
    case InstrKind::kCX: {
      size_t ca = size_t{1} << op.a, cb = size_t{1} << op.b;
      for (size_t i = 0; i < dim; ++i) {
        if ((i & ca) && !(i & cb)) std::swap(s[i], s[i | cb]);
      }
      break;
    }
    default:
      throw std::logic_error("not a gate");
  }
}

void enumerate(const std::vector<AtomicOp>& ops, size_t idx, State state,
               double prob, std::string outcomes, size_t n,
               std::map<std::string, double>& dist) {
  constexpr double kEps = 1e-12;
  for (size_t k = idx; k < ops.size(); ++k) {
    const AtomicOp& op = ops[k];
    if (op.kind == InstrKind::kM || op.kind == InstrKind::kR) {
      size_t bit = size_t{1} << op.a;
      double p1 = 0;
      for (size_t i = 0; i < state.size(); ++i) {
        if (i & bit) p1 += std::norm(state[i]);
      }
      double p0 = 1.0 - p1;
      for (int outcome = 0; outcome < 2; ++outcome) {
        double p = outcome ? p1 : p0;
        if (p < kEps) continue;
        State branch = state;
        double inv = 1.0 / std::sqrt(p);
        for (size_t i = 0; i < branch.size(); ++i) {
          bool one = (i & bit) != 0;
          if (one != (outcome == 1)) {
            branch[i] = 0;
          } else {
            branch[i] *= inv;
          }
        }
        std::string next_out = outcomes;
        if (op.kind == InstrKind::kM) next_out += outcome ? '1' : '0';
        if (op.kind == InstrKind::kR && outcome == 1) {
          apply_gate(branch, AtomicOp{InstrKind::kX, op.a}, n);
        }
        enumerate(ops, k + 1, std::move(branch), prob * p, std::move(next_out), n,
                  dist);
      }
      return;
    }
    apply_gate(state, op, n);
  }
  double norm = 0;
  for (const auto& a : state) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::logic_error("state vector lost unit norm");
  }
  dist[outcomes] += prob;
}

}  // namespace

std::map<std::string, double> exact_distribution(
    const std::vector<Instruction>& instructions) {
  size_t n = qubit_count(instructions);
  if (n > 12) throw std::invalid_argument("state-vector oracle limited to 12 qubits");

  std::vector<AtomicOp> ops;
  for (const auto& inst : instructions) {
    if (is_noise(inst.kind)) {
      throw std::invalid_argument("exact_distribution expects a noiseless circuit");
    }
    if (inst.kind == InstrKind::kTick) continue;
    if (inst.kind == InstrKind::kCX) {
      for (size_t i = 0; i + 1 < inst.targets.size(); i += 2) {
        ops.push_back({InstrKind::kCX, inst.targets[i], inst.targets[i + 1]});
      }
    } else {
      for (uint32_t q : inst.targets) ops.push_back({inst.kind, q});
    }
  }

  std::map<std::string, double> dist;
  if (n == 0) {
    dist[""] = 1.0;
    return dist;
  }
  State state(size_t{1} << n, 0.0);
  state[0] = 1.0;
  enumerate(ops, 0, std::move(state), 1.0, "", n, dist);
  return dist;
}

}  // namespace cliffsym
