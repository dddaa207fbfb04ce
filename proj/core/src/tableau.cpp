#include "cliffsym/tableau.hpp"

#include <bit>
#include <stdexcept>

namespace cliffsym {

namespace {

size_t pad_to_tile(size_t n) {
  size_t t = Tile::kBits;
  return (n + t - 1) / t * t;
}

}  // namespace

SymbolicTableau::SymbolicTableau(size_t n_qubits, size_t symbol_capacity)
    : n_(n_qubits),
      symbol_capacity_(symbol_capacity),
      x_width_(pad_to_tile(n_qubits)),
      mat_(2 * n_qubits, 2 * pad_to_tile(n_qubits) + pad_to_tile(symbol_capacity)) {
  if (n_qubits == 0) throw std::invalid_argument("tableau needs at least one qubit");
  if (symbol_capacity == 0) throw std::invalid_argument("symbol capacity must cover s0");
  for (size_t i = 0; i < n_; ++i) {
    mat_.set_bit(i, col_x(static_cast<uint32_t>(i)), true);
    mat_.set_bit(n_ + i, col_z(static_cast<uint32_t>(i)), true);
  }
}

void SymbolicTableau::check_qubit(uint32_t a) const {
  if (a >= n_) throw std::out_of_range("qubit index");
}

void SymbolicTableau::check_symbol(uint32_t s) const {
  if (s >= symbol_capacity_) throw std::out_of_range("symbol id");
}

void SymbolicTableau::apply_h(uint32_t a) {
  check_qubit(a);
  ensure_column_order();
  BitVec v = mat_.column_select_and(col_x(a), col_z(a));
  mat_.column_xor_bits(col_sym(0), v);
  mat_.column_swap(col_x(a), col_z(a));
}

void SymbolicTableau::apply_s(uint32_t a) {
  check_qubit(a);
  ensure_column_order();
  BitVec v = mat_.column_select_and(col_x(a), col_z(a));
  mat_.column_xor_bits(col_sym(0), v);
  mat_.column_op_xor(col_z(a), col_x(a));
}

void SymbolicTableau::apply_s_dag(uint32_t a) {
  check_qubit(a);
  ensure_column_order();
  BitVec v = mat_.column_bits(col_z(a));
  v.flip_all();
  BitVec x = mat_.column_bits(col_x(a));
  v &= x;
  mat_.column_xor_bits(col_sym(0), v);
  mat_.column_op_xor(col_z(a), col_x(a));
}

void SymbolicTableau::apply_cnot(uint32_t a, uint32_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("cnot control equals target");
  ensure_column_order();
  // Phase term: x_a & z_b & ~(x_b ^ z_a).
  BitVec v = mat_.column_bits(col_x(b));
  v ^= mat_.column_bits(col_z(a));
  v.flip_all();
  v &= mat_.column_select_and(col_x(a), col_z(b));
  mat_.column_xor_bits(col_sym(0), v);
  mat_.column_op_xor(col_x(b), col_x(a));
  mat_.column_op_xor(col_z(a), col_z(b));
}

void SymbolicTableau::apply_pauli_x(uint32_t a, uint32_t s) {
  check_qubit(a);
  check_symbol(s);
  ensure_column_order();
  mat_.column_op_xor(col_sym(s), col_z(a));
}

void SymbolicTableau::apply_pauli_z(uint32_t a, uint32_t s) {
  check_qubit(a);
  check_symbol(s);
  ensure_column_order();
  mat_.column_op_xor(col_sym(s), col_x(a));
}

void SymbolicTableau::apply_pauli_y(uint32_t a, uint32_t s) {
  check_qubit(a);
  check_symbol(s);
  ensure_column_order();
  mat_.column_op_xor(col_sym(s), col_x(a));
  mat_.column_op_xor(col_sym(s), col_z(a));
}

void SymbolicTableau::apply_conditional_pauli(uint32_t a, PauliAxis axis,
                                              const MeasurementExpression& e) {
  for (uint32_t s : e.symbols) {
    switch (axis) {
      case PauliAxis::kX: apply_pauli_x(a, s); break;
      case PauliAxis::kY: apply_pauli_y(a, s); break;
      case PauliAxis::kZ: apply_pauli_z(a, s); break;
    }
  }
}

int SymbolicTableau::rowsum_rows(size_t dst, size_t src) {
  size_t x_tiles = x_width_ / Tile::kBits;
  unsigned kd = dst % 8, ks = src % 8;
  int64_t plus = 0, minus = 0;
  for (size_t t = 0; t < x_tiles; ++t) {
    const uint64_t* xs_s = mat_.row_segment(src, t);
    const uint64_t* zs_s = mat_.row_segment(src, x_tiles + t);
    const uint64_t* xs_d = mat_.row_segment(dst, t);
    const uint64_t* zs_d = mat_.row_segment(dst, x_tiles + t);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      uint64_t x1 = (xs_s[i] >> ks) & kLaneMask;
      uint64_t z1 = (zs_s[i] >> ks) & kLaneMask;
      uint64_t x2 = (xs_d[i] >> kd) & kLaneMask;
      uint64_t z2 = (zs_d[i] >> kd) & kLaneMask;
      uint64_t nx1 = x1 ^ kLaneMask, nz1 = z1 ^ kLaneMask;
      uint64_t nx2 = x2 ^ kLaneMask, nz2 = z2 ^ kLaneMask;
      uint64_t p = (x1 & nz1 & nx2 & z2) | (x1 & z1 & x2 & nz2) |
                   (nx1 & z1 & x2 & z2);
      uint64_t m = (x1 & nz1 & x2 & z2) | (x1 & z1 & nx2 & z2) |
                   (nx1 & z1 & x2 & nz2);
      plus += std::popcount(p);
      minus += std::popcount(m);
    }
  }
  int residue = static_cast<int>((((plus - minus) % 4) + 4) % 4);
  if (residue % 2 != 0) {
    throw std::logic_error("non-hermitian generator product: tableau corrupt");
  }
  mat_.row_op_xor(dst, src);
  if (residue == 2) mat_.flip_bit(dst, col_sym(0));
  return residue;
}

MeasurementExpression SymbolicTableau::measure(uint32_t a, SymbolRegistry& registry,
                                               size_t instruction_index) {
  check_qubit(a);
  ensure_row_order();

  size_t pivot = 2 * n_;
  for (size_t p = n_; p < 2 * n_; ++p) {
    if (mat_.get_bit(p, col_x(a))) {
      pivot = p;
      break;
    }
  }

  if (pivot < 2 * n_) {
    // Random outcome. Clean every other row anticommuting with Z_a, then
    // rebuild the pivot pair and stamp a fresh coin symbol into the new
    // stabilizer's phase.
    for (size_t i = 0; i < 2 * n_; ++i) {
      if (i == pivot || i + n_ == pivot) continue;
      if (mat_.get_bit(i, col_x(a))) rowsum_rows(i, pivot);
    }
    mat_.row_copy(pivot - n_, pivot);
    mat_.row_clear(pivot);
    mat_.set_bit(pivot, col_z(a), true);
    if (registry.size() >= symbol_capacity_) {
      throw std::logic_error("symbol capacity exhausted (pre-pass undercount)");
    }
    uint32_t s = registry.add_measurement_symbol(instruction_index);
    mat_.set_bit(pivot, col_sym(s), true);
    return MeasurementExpression{{s}};
  }

  // Determined outcome: multiply together the stabilizers selected by the
  // destabilizers that anticommute with Z_a; the product is +/-Z_a and its
  // phase is the outcome.
  PauliRow scratch(n_, symbol_capacity_);
  for (size_t i = 0; i < n_; ++i) {
    if (!mat_.get_bit(i, col_x(a))) continue;
    PauliRow stab = extract_row(n_ + i);
    int residue = row_multiply_into(scratch, stab);
    if (residue % 2 != 0) {
      throw std::logic_error("non-hermitian generator product: tableau corrupt");
    }
  }
  if (scratch.xs.any() || !scratch.zs.get(a) || scratch.zs.count() != 1) {
    throw std::logic_error("determined measurement did not reduce to Z_a");
  }
  MeasurementExpression e;
  for (uint32_t s = 0; s < symbol_capacity_; ++s) {
    if (scratch.phase.get(s)) e.symbols.push_back(s);
  }
  return e;
}

PauliRow SymbolicTableau::extract_row(size_t i) const {
  if (i >= 2 * n_) throw std::out_of_range("row index");
  PauliRow r(n_, symbol_capacity_);
  for (uint32_t q = 0; q < n_; ++q) {
    r.xs.set(q, mat_.get_bit(i, col_x(q)));
    r.zs.set(q, mat_.get_bit(i, col_z(q)));
  }
  for (uint32_t s = 0; s < symbol_capacity_; ++s) {
    r.phase.set(s, mat_.get_bit(i, col_sym(s)));
  }
  return r;
}

void SymbolicTableau::xor_phase_bit(size_t row, uint32_t symbol) {
  if (row >= 2 * n_) throw std::out_of_range("row index");
  check_symbol(symbol);
  mat_.flip_bit(row, col_sym(symbol));
}

namespace {

std::string phase_expr_string(const BitVec& phase) {
  std::string out;
  for (size_t s = 0; s < phase.size(); ++s) {
    if (!phase.get(s)) continue;
    if (!out.empty()) out += '+';
    out += s == 0 ? "1" : "s" + std::to_string(s);
  }
  return out.empty() ? "0" : out;
}

void append_generator_line(std::string& out, const PauliRow& r) {
  out += "(-1)^{";
  out += phase_expr_string(r.phase);
  out += "} ";
  for (size_t q = 0; q < r.n_qubits(); ++q) {
    bool x = r.xs.get(q), z = r.zs.get(q);
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  out += '\n';
}

}  // namespace

std::string SymbolicTableau::dump_stabilizers() const {
  std::string out;
  for (size_t i = n_; i < 2 * n_; ++i) append_generator_line(out, extract_row(i));
  return out;
}

std::string SymbolicTableau::dump() const {
  std::string out = "destabilizers:\n";
  for (size_t i = 0; i < n_; ++i) append_generator_line(out, extract_row(i));
  out += "stabilizers:\n";
  out += dump_stabilizers();
  return out;
}

bool SymbolicTableau::check_symplectic() const {
  std::vector<PauliRow> rows;
  rows.reserve(2 * n_);
  for (size_t i = 0; i < 2 * n_; ++i) rows.push_back(extract_row(i));
  auto anticommute = [](const PauliRow& a, const PauliRow& b) {
    BitVec u = a.xs;
    u &= b.zs;
    BitVec v = a.zs;
    v &= b.xs;
    return ((u.count() + v.count()) % 2) == 1;
  };
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) {
      if (anticommute(rows[n_ + i], rows[n_ + j])) return false;          // stab pair
      if (anticommute(rows[i], rows[j])) return false;                    // destab pair
      bool want = i == j;
      if (anticommute(rows[i], rows[n_ + j]) != want) return false;       // cross
    }
  }
  return true;
}

bool SymbolicTableau::check_full_rank() const {
  // Gaussian elimination over GF(2) on the 2n x 2n x/z submatrix.
  size_t cols = 2 * n_;
  std::vector<std::vector<uint64_t>> m(2 * n_,
                                       std::vector<uint64_t>((cols + 63) / 64, 0));
  for (size_t i = 0; i < 2 * n_; ++i) {
    PauliRow r = extract_row(i);
    for (size_t q = 0; q < n_; ++q) {
      if (r.xs.get(q)) m[i][q / 64] |= uint64_t{1} << (q % 64);
      if (r.zs.get(q)) m[i][(n_ + q) / 64] |= uint64_t{1} << ((n_ + q) % 64);
    }
  }
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < 2 * n_; ++c) {
    size_t p = rank;
    while (p < 2 * n_ && !((m[p][c / 64] >> (c % 64)) & 1)) ++p;
    if (p == 2 * n_) continue;
    std::swap(m[p], m[rank]);
    for (size_t i = 0; i < 2 * n_; ++i) {
      if (i != rank && ((m[i][c / 64] >> (c % 64)) & 1)) {
        for (size_t w = 0; w < m[i].size(); ++w) m[i][w] ^= m[rank][w];
      }
    }
    ++rank;
  }
  return rank == 2 * n_;
}

std::string expression_to_string(const MeasurementExpression& e) {
  if (e.symbols.empty()) return "0";
  std::string out;
  for (uint32_t s : e.symbols) {
    if (!out.empty()) out += " ^ ";
    out += s == 0 ? "1" : "s" + std::to_string(s);
  }
  return out;
}

InitResult run_initialization(const std::vector<Instruction>& instructions) {
  InitResult res;
  res.summary = summarize(instructions);
  if (res.summary.n_qubits == 0) return res;

  SymbolicTableau t(res.summary.n_qubits, res.summary.symbol_capacity());
  for (size_t idx = 0; idx < instructions.size(); ++idx) {
    const Instruction& inst = instructions[idx];
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
        for (uint32_t q : inst.targets) t.apply_pauli_x(q, 0);
        break;
      case InstrKind::kY:
        for (uint32_t q : inst.targets) t.apply_pauli_y(q, 0);
        break;
      case InstrKind::kZ:
        for (uint32_t q : inst.targets) t.apply_pauli_z(q, 0);
        break;
      case InstrKind::kCX:
        for (size_t i = 0; i + 1 < inst.targets.size(); i += 2) {
          t.apply_cnot(inst.targets[i], inst.targets[i + 1]);
        }
        break;
      case InstrKind::kM:
        for (uint32_t q : inst.targets) {
          res.expressions.push_back(t.measure(q, res.registry, idx));
        }
        break;
      case InstrKind::kR:
        // Reset as measure-and-correct: the conditional X returns the qubit
        // to |0> under every symbol assignment.
        for (uint32_t q : inst.targets) {
          MeasurementExpression e = t.measure(q, res.registry, idx);
          t.apply_conditional_pauli(q, PauliAxis::kX, e);
        }
        break;
      case InstrKind::kXError:
      case InstrKind::kYError:
      case InstrKind::kZError:
      case InstrKind::kDepolarize1:
      case InstrKind::kDepolarize2:
        for (const auto& app : decompose_noise(inst, idx, res.registry)) {
          switch (app.axis) {
            case PauliAxis::kX: t.apply_pauli_x(app.qubit, app.symbol); break;
            case PauliAxis::kY: t.apply_pauli_y(app.qubit, app.symbol); break;
            case PauliAxis::kZ: t.apply_pauli_z(app.qubit, app.symbol); break;
          }
        }
        break;
      case InstrKind::kTick:
        break;
    }
  }
  res.tableau.emplace(std::move(t));
  return res;
}

}  // namespace cliffsym
