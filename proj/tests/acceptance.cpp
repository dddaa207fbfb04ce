// Acceptance suite: end-to-end checks with pinned tolerances, one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliffsym/bit_matrix.hpp"
#include "cliffsym/circuit_gen.hpp"
#include "cliffsym/oracle.hpp"
#include "cliffsym/sampler.hpp"
#include "cliffsym/tableau.hpp"
#include "test_support.hpp"

using namespace cliffsym;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const char* kWorkedExample = "H 0\nCX 0 1\nX_ERROR(0.1) 0 1\nM 0 1\n";
const char* kFourQubitExample =
    "H 0\nCX 0 1\nCX 1 2\nCX 2 3\n"
    "Z_ERROR(0.1) 0\nX_ERROR(0.1) 1\nX_ERROR(0.1) 2\nX_ERROR(0.1) 3\n"
    "CX 2 3\nCX 1 2\nCX 0 1\nH 0\nM 0 1 2 3\n";

// ---- subprocess helpers (criteria 1 and 9) --------------------------------

std::string cli_binary() {
  if (const char* p = std::getenv("CLIFFSYM_BIN")) return p;
  // Fallback for manual runs from the build tree.
  for (const char* guess : {"./tools/cliffsym", "../tools/cliffsym",
                            "build/tools/cliffsym"}) {
    if (fs::exists(guess)) return fs::absolute(guess).string();
  }
  require(false, "CLIFFSYM_BIN not set and binary not found");
  return {};
}

std::string run_cli(const std::string& args, int expect_status = 0) {
  std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "popen failed");
  std::string out;
  char buf[8192];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  int status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  require(status == expect_status, "unexpected CLI exit status");
  return out;
}

fs::path scratch(const std::string& name, const std::string& content) {
  fs::path d = fs::temp_directory_path() / "cliffsym_acceptance";
  fs::create_directories(d);
  fs::path p = d / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

// ---- tableau snapshot helper ----------------------------------------------

struct RowSpec {
  std::string paulis;
  std::vector<uint32_t> phase;
};

void require_rows(const SymbolicTableau& t, const std::vector<RowSpec>& rows,
                  const std::string& label) {
  require(rows.size() == 2 * t.n_qubits(), label + ": row count");
  for (size_t i = 0; i < rows.size(); ++i) {
    PauliRow r = t.extract_row(i);
    for (size_t q = 0; q < t.n_qubits(); ++q) {
      char c = rows[i].paulis[q];
      bool x = c == 'X' || c == 'Y';
      bool z = c == 'Z' || c == 'Y';
      require(r.xs.get(q) == x && r.zs.get(q) == z,
              label + ": pauli mismatch at row " + std::to_string(i));
    }
    BitVec want(t.symbol_capacity());
    for (uint32_t s : rows[i].phase) want.set(s, true);
    require(r.phase == want, label + ": phase mismatch at row " + std::to_string(i));
  }
}

// ---- criteria ---------------------------------------------------------------

// Two-qubit worked example: analyze output and all displayed tableaux.
void criterion_1() {
  auto analysis = run_cli("analyze --in " + scratch("c1.stim", kWorkedExample).string());
  require(analysis.rfind("m1 = s3\nm2 = s1 ^ s2 ^ s3\n", 0) == 0,
          "analyze output mismatch: " + analysis.substr(0, 60));

  SymbolRegistry reg;
  SymbolicTableau t(2, 5);
  require_rows(t, {{"XI", {}}, {"IX", {}}, {"ZI", {}}, {"IZ", {}}}, "initial");
  t.apply_h(0);
  require_rows(t, {{"ZI", {}}, {"IX", {}}, {"XI", {}}, {"IZ", {}}}, "after H");
  t.apply_cnot(0, 1);
  require_rows(t, {{"ZI", {}}, {"IX", {}}, {"XX", {}}, {"ZZ", {}}}, "after CNOT");
  uint32_t s1 = reg.add_fault_group(GroupDistribution::kBernoulli, 0.1, 1, 2);
  t.apply_pauli_x(0, s1);
  require_rows(t, {{"ZI", {1}}, {"IX", {}}, {"XX", {}}, {"ZZ", {1}}},
               "after first fault");
  uint32_t s2 = reg.add_fault_group(GroupDistribution::kBernoulli, 0.1, 1, 2);
  t.apply_pauli_x(1, s2);
  require_rows(t, {{"ZI", {1}}, {"IX", {}}, {"XX", {}}, {"ZZ", {1, 2}}},
               "after second fault");
  MeasurementExpression m1 = t.measure(0, reg, 3);
  require(m1.symbols == std::vector<uint32_t>{3}, "m1 symbols");
  require_rows(t, {{"XX", {}}, {"IX", {}}, {"ZI", {3}}, {"ZZ", {1, 2}}},
               "after first measurement");
  MeasurementExpression m2 = t.measure(1, reg, 3);
  require(m2.symbols == (std::vector<uint32_t>{1, 2, 3}), "m2 symbols");
  require_rows(t, {{"XX", {}}, {"IX", {}}, {"ZI", {3}}, {"ZZ", {1, 2}}},
               "after second measurement");
}

// Four-qubit encode/fault/decode example.
void criterion_2() {
  InitResult init = run_initialization(parse_circuit(kFourQubitExample));
  require(init.expressions.size() == 4, "expression count");
  require(expression_to_string(init.expressions[0]) == "s1", "m1");
  require(expression_to_string(init.expressions[1]) == "s2", "m2");
  require(expression_to_string(init.expressions[2]) == "s2 ^ s3", "m3");
  require(expression_to_string(init.expressions[3]) == "s3 ^ s4", "m4");

  SymbolRegistry reg;
  SymbolicTableau t(4, 9);
  require(t.dump_stabilizers() ==
              "(-1)^{0} ZIII\n(-1)^{0} IZII\n(-1)^{0} IIZI\n(-1)^{0} IIIZ\n",
          "psi0 stabilizers");
  t.apply_h(0);
  t.apply_cnot(0, 1);
  t.apply_cnot(1, 2);
  t.apply_cnot(2, 3);
  require(t.dump_stabilizers() ==
              "(-1)^{0} XXXX\n(-1)^{0} ZZII\n(-1)^{0} IZZI\n(-1)^{0} IIZZ\n",
          "psi1 stabilizers");
  t.apply_pauli_z(0, reg.add_fault_group(GroupDistribution::kBernoulli, 0.1, 1, 4));
  t.apply_pauli_x(1, reg.add_fault_group(GroupDistribution::kBernoulli, 0.1, 1, 5));
  t.apply_pauli_x(2, reg.add_fault_group(GroupDistribution::kBernoulli, 0.1, 1, 6));
  t.apply_pauli_x(3, reg.add_fault_group(GroupDistribution::kBernoulli, 0.1, 1, 7));
  require(t.dump_stabilizers() ==
              "(-1)^{s1} XXXX\n(-1)^{s2} ZZII\n(-1)^{s2+s3} IZZI\n"
              "(-1)^{s3+s4} IIZZ\n",
          "psi2 stabilizers");
  t.apply_cnot(2, 3);
  t.apply_cnot(1, 2);
  t.apply_cnot(0, 1);
  t.apply_h(0);
  require(t.dump_stabilizers() ==
              "(-1)^{s1} ZIII\n(-1)^{s2} IZII\n(-1)^{s2+s3} IIZI\n"
              "(-1)^{s3+s4} IIIZ\n",
          "psi3 stabilizers");
}

// Concretization commutes: symbolic expressions equal concrete re-simulation
// under forced assignments, bit for bit.
void criterion_3() {
  std::mt19937_64 rng(0xC3);
  size_t checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    RandomCircuitOptions opt;
    opt.n_qubits = 1 + rng() % 8;
    opt.n_instructions = 20 + rng() % 61;  // up to 80
    auto circ = random_circuit(opt, rng());
    InitResult init = run_initialization(circ);
    for (int k = 0; k < 50; ++k) {
      BitVec assign(init.registry.size());
      assign.set(0, true);
      for (size_t s = 1; s < init.registry.size(); ++s) assign.set(s, rng() & 1);
      std::mt19937_64 dummy(0);
      ConcreteShot shot = run_concrete_shot(circ, &assign, dummy);
      require(shot.measurements.size() == init.expressions.size(),
              "measurement count mismatch");
      for (size_t m = 0; m < shot.measurements.size(); ++m) {
        require((shot.measurements[m] != 0) == init.expressions[m].evaluate(assign),
                "outcome mismatch at trial " + std::to_string(trial));
        ++checked;
      }
    }
  }
  require(checked > 50000, "too few comparisons to be meaningful");
}

// Noiseless sampled distributions against the state-vector oracle.
void criterion_4() {
  std::mt19937_64 rng(0xC4);
  const size_t shots = 20000;
  for (int trial = 0; trial < 100; ++trial) {
    RandomCircuitOptions opt;
    opt.n_qubits = 2 + rng() % 7;
    opt.n_instructions = 30 + rng() % 15;
    opt.with_noise = false;
    opt.max_measurements = 6;
    auto circ = random_circuit(opt, rng());
    bool has_measurement = false;
    for (const auto& inst : circ) has_measurement |= inst.kind == InstrKind::kM;
    if (!has_measurement) circ.push_back({InstrKind::kM, {0}, 0.0, 0});

    InitResult init = run_initialization(circ);
    auto exact = exact_distribution(circ);

    SymbolAssignmentBatch batch = draw_assignments(init.registry, shots, rng());
    SampleMatrix samples = sample(init.expressions, batch);
    std::map<std::string, double> emp;
    for (size_t j = 0; j < shots; ++j) {
      std::string key;
      for (size_t k = 0; k < init.expressions.size(); ++k) {
        key += samples.data.get_bit(k, j) ? '1' : '0';
      }
      emp[key] += 1.0 / shots;
    }

    double tvd = 0;
    for (const auto& [k, v] : exact) {
      auto it = emp.find(k);
      tvd += std::abs(v - (it == emp.end() ? 0.0 : it->second));
    }
    for (const auto& [k, v] : emp) {
      if (!exact.count(k)) tvd += v;
    }
    tvd /= 2;
    require(tvd < 0.05, "TVD " + std::to_string(tvd) + " at trial " +
                            std::to_string(trial));

    // Determined outcomes must be exact on both routes.
    for (size_t k = 0; k < init.expressions.size(); ++k) {
      const auto& sym = init.expressions[k].symbols;
      bool constant = sym.empty() || (sym.size() == 1 && sym[0] == 0);
      if (!constant) continue;
      bool expect = !sym.empty();
      for (const auto& [key, v] : exact) {
        require((key[k] == '1') == expect, "state-vector disagrees on a "
                                           "determined outcome");
      }
      for (size_t j = 0; j < shots; ++j) {
        if (samples.data.get_bit(k, j) != expect) {
          require(false, "sampled shot disagrees on a determined outcome");
        }
      }
    }
  }
}

void check_4sigma(double hits, double shots, double p, const std::string& what) {
  double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / shots);
  double phat = hits / shots;
  require(std::abs(phat - p) <= 4 * sigma,
          what + ": got " + std::to_string(phat) + " want " + std::to_string(p));
}

// Noise-channel marginals through the full pipeline.
void criterion_5() {
  const size_t shots = 200000;
  uint64_t seed = 0xC5;
  for (double p : {0.01, 0.1, 0.5}) {
    char text[64];
    std::snprintf(text, sizeof(text), "X_ERROR(%g) 0\nM 0\n", p);
    InitResult init = run_initialization(parse_circuit(text));
    auto batch = draw_assignments(init.registry, shots, seed++);
    auto m = sample(init.expressions, batch);
    double hits = 0;
    for (size_t j = 0; j < shots; ++j) hits += m.data.get_bit(0, j);
    check_4sigma(hits, shots, p, "X_ERROR flip rate p=" + std::to_string(p));
  }

  // Bell-basis probe reads both components of the depolarizing channel:
  // outcome (m1, m2) = (Z part, X part).
  for (double p : {0.01, 0.1, 0.5}) {
    char text[96];
    std::snprintf(text, sizeof(text),
                  "H 0\nCX 0 1\nDEPOLARIZE1(%g) 0\nCX 0 1\nH 0\nM 0 1\n", p);
    InitResult init = run_initialization(parse_circuit(text));
    auto batch = draw_assignments(init.registry, shots, seed++);
    auto m = sample(init.expressions, batch);
    double counts[4] = {0, 0, 0, 0};
    for (size_t j = 0; j < shots; ++j) {
      int pattern = m.data.get_bit(0, j) | (m.data.get_bit(1, j) << 1);
      counts[pattern] += 1;
    }
    check_4sigma(counts[0], shots, 1 - p, "depolarize identity");
    check_4sigma(counts[1], shots, p / 3, "depolarize Z component");
    check_4sigma(counts[2], shots, p / 3, "depolarize X component");
    check_4sigma(counts[3], shots, p / 3, "depolarize Y component");
  }
}

// Sparse sampling vs dense GF(2) multiply vs per-shot evaluation.
void criterion_6() {
  std::mt19937_64 rng(0xC6);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n_m = 50 + rng() % 251;    // <= 300
    size_t n_s = 100 + rng() % 401;   // <= 500
    size_t n_smp = 256 + rng() % 1793;  // <= 2048

    TiledBitMatrix batch_bits(n_s, n_smp);
    for (size_t r = 0; r < n_s; ++r) {
      for (size_t c = 0; c < n_smp; ++c) {
        if (rng() & 1) batch_bits.set_bit(r, c, true);
      }
    }
    SymbolAssignmentBatch batch{std::move(batch_bits)};

    std::vector<MeasurementExpression> exprs(n_m);
    TiledBitMatrix dense(n_m, n_s);
    for (size_t k = 0; k < n_m; ++k) {
      size_t nnz = rng() % 31;
      for (size_t i = 0; i < nnz; ++i) {
        uint32_t s = static_cast<uint32_t>(rng() % n_s);
        auto& v = exprs[k].symbols;
        auto it = std::find(v.begin(), v.end(), s);
        if (it != v.end()) {
          v.erase(it);
          dense.set_bit(k, s, false);
        } else {
          v.push_back(s);
          dense.set_bit(k, s, true);
        }
      }
      std::sort(exprs[k].symbols.begin(), exprs[k].symbols.end());
    }

    SampleMatrix fast = sample(exprs, batch);
    TiledBitMatrix expect = gf2_multiply(dense, batch.data);
    require(fast.data.same_bits(expect), "sparse path != dense multiply");

    std::uniform_int_distribution<size_t> pick_shot(0, n_smp - 1);
    for (int probe = 0; probe < 40; ++probe) {
      size_t j = pick_shot(rng);
      BitVec assign(n_s);
      for (size_t s = 0; s < n_s; ++s) assign.set(s, batch.data.get_bit(s, j));
      for (size_t k = 0; k < n_m; ++k) {
        require(fast.data.get_bit(k, j) == exprs[k].evaluate(assign),
                "sparse path != per-shot evaluation");
      }
    }
  }
}

// Tiled layout kernels against naive oracles at tile-straddling sizes.
void criterion_7() {
  std::mt19937_64 rng(0xC7);
  for (size_t n : {511u, 512u, 513u, 1024u, 1537u}) {
    testsupport::NaiveBits mirror(n, n);
    TiledBitMatrix m(n, n);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        if (rng() & 1) {
          m.set_bit(r, c, true);
          mirror.set(r, c, 1);
        }
      }
    }

    TiledBitMatrix snapshot = m;
    m.local_transpose();
    m.local_transpose();
    for (size_t tr = 0; tr < m.tile_rows(); ++tr) {
      for (size_t tc = 0; tc < m.tile_cols(); ++tc) {
        require(m.tile(tr, tc).words == snapshot.tile(tr, tc).words,
                "transpose involution changed raw storage");
      }
    }

    m.local_transpose();
    std::uniform_int_distribution<size_t> idx(0, n - 1);
    for (int probe = 0; probe < 10000; ++probe) {
      size_t r = idx(rng), c = idx(rng);
      require(m.get_bit(r, c) == (mirror.get(r, c) != 0),
              "orientation-dependent read");
    }
    m.local_transpose();

    for (int op = 0; op < 100; ++op) {
      size_t d = idx(rng), s = idx(rng);
      if (d == s) continue;
      m.column_op_xor(d, s);
      mirror.xor_col(d, s);
    }
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        require(m.get_bit(r, c) == (mirror.get(r, c) != 0),
                "column op diverged from naive oracle");
      }
    }

    testsupport::NaiveBits na(n, 300), nb(300, n);
    TiledBitMatrix a(n, 300), b(300, n);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < 300; ++c) {
        if (rng() & 1) {
          a.set_bit(r, c, true);
          na.set(r, c, 1);
        }
        if (rng() & 1) {
          b.set_bit(c, r, true);
          nb.set(c, r, 1);
        }
      }
    }
    TiledBitMatrix prod = gf2_multiply(a, b);
    testsupport::NaiveBits want = testsupport::naive_multiply(na, nb);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        require(prod.get_bit(r, c) == (want.get(r, c) != 0),
                "multiply diverged from naive oracle");
      }
    }
  }
}

// Sampling cost must not depend on gate count: pad a circuit with 100,000
// self-canceling Clifford gates and compare sampling wall-clock.
void criterion_8(std::string& detail) {
  std::mt19937_64 rng(0xC8);
  const size_t n = 32;
  std::vector<Instruction> base;
  for (int round = 0; round < 6; ++round) {
    Instruction h{InstrKind::kH, {}, 0.0, 0};
    for (uint32_t q = 0; q < n; ++q) h.targets.push_back(q);
    base.push_back(h);
    Instruction cx{InstrKind::kCX, {}, 0.0, 0};
    for (uint32_t q = 0; q < n / 2; ++q) {
      cx.targets.push_back(q);
      cx.targets.push_back(q + n / 2);
    }
    base.push_back(cx);
    Instruction xe{InstrKind::kXError, {}, 0.01, 0};
    Instruction dep{InstrKind::kDepolarize1, {}, 0.02, 0};
    for (uint32_t q = 0; q < n; ++q) {
      xe.targets.push_back(q);
      dep.targets.push_back(q);
    }
    base.push_back(xe);
    base.push_back(dep);
    Instruction m{InstrKind::kM, {}, 0.0, 0};
    for (uint32_t q = 0; q < n; ++q) m.targets.push_back(q);
    base.push_back(m);
  }

  // Same circuit plus 100,000 gates in adjacent self-inverse pairs, so the
  // state at every original instruction is untouched.
  std::vector<Instruction> padded;
  const size_t kExtraGates = 100000;
  size_t pairs_per_slot = kExtraGates / 2 / base.size();
  auto push_pair = [&]() {
    uint32_t q = static_cast<uint32_t>(rng() % n);
    switch (rng() % 3) {
      case 0:
        padded.push_back({InstrKind::kH, {q}, 0.0, 0});
        padded.push_back({InstrKind::kH, {q}, 0.0, 0});
        break;
      case 1: {
        uint32_t b = static_cast<uint32_t>(rng() % n);
        while (b == q) b = static_cast<uint32_t>(rng() % n);
        padded.push_back({InstrKind::kCX, {q, b}, 0.0, 0});
        padded.push_back({InstrKind::kCX, {q, b}, 0.0, 0});
        break;
      }
      default:
        padded.push_back({InstrKind::kS, {q}, 0.0, 0});
        padded.push_back({InstrKind::kSDag, {q}, 0.0, 0});
        break;
    }
  };
  size_t emitted = 0;
  for (const auto& inst : base) {
    for (size_t k = 0; k < pairs_per_slot; ++k, ++emitted) push_pair();
    padded.push_back(inst);
  }
  while (2 * emitted < kExtraGates) {
    push_pair();
    ++emitted;
  }

  auto t0 = Clock::now();
  InitResult init_base = run_initialization(base);
  double init_base_s = std::chrono::duration<double>(Clock::now() - t0).count();
  t0 = Clock::now();
  InitResult init_padded = run_initialization(padded);
  double init_padded_s = std::chrono::duration<double>(Clock::now() - t0).count();

  require(init_base.expressions == init_padded.expressions,
          "padding with identity pairs changed the expressions");

  const size_t shots = 10000;
  auto time_sampling = [&](const InitResult& init) {
    double best = 1e100;
    for (int rep = 0; rep < 5; ++rep) {
      auto start = Clock::now();
      SymbolAssignmentBatch batch = draw_assignments(init.registry, shots, 11);
      SampleMatrix m = sample(init.expressions, batch);
      std::string enc = encode_shots(m, ShotFormat::kB8);
      require(!enc.empty(), "no output");
      best = std::min(best,
                      std::chrono::duration<double>(Clock::now() - start).count());
    }
    return best;
  };

  double base_s = time_sampling(init_base);
  double padded_s = time_sampling(init_padded);
  double ratio = std::max(base_s, padded_s) / std::min(base_s, padded_s);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "sampling %.4fs vs %.4fs (ratio %.3f), init %.3fs vs %.3fs",
                base_s, padded_s, ratio, init_base_s, init_padded_s);
  detail = buf;
  require(ratio <= 1.25, std::string("sampling ratio too high: ") + buf);
}

// Byte-identical repeated sampling through the CLI.
void criterion_9() {
  std::vector<std::pair<std::string, std::string>> circuits = {
      {"det1.stim", kWorkedExample},
      {"det2.stim", kFourQubitExample},
      {"det3.stim",
       print_circuit(generate_bench_circuit(BenchFamily::kSparseCnot, 100, 7))},
  };
  for (const auto& [name, text] : circuits) {
    fs::path p = scratch(name, text);
    for (const char* fmt : {"01", "b8"}) {
      std::string args = "sample --in " + p.string() +
                         " --shots 256 --seed 42 --format " + fmt;
      std::string a = run_cli(args);
      std::string b = run_cli(args);
      require(!a.empty() && a == b, "outputs differ for " + name);
    }
  }
}

struct Criterion {
  int number;
  const char* name;
  double time_limit_s;
  std::function<void(std::string&)> fn;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "worked-example regression", 1.0, [](std::string&) { criterion_1(); }},
      {2, "four-qubit example regression", 1.0, [](std::string&) { criterion_2(); }},
      {3, "concretization commutes", 60.0, [](std::string&) { criterion_3(); }},
      {4, "noiseless distribution equivalence", 120.0,
       [](std::string&) { criterion_4(); }},
      {5, "noise marginals", 30.0, [](std::string&) { criterion_5(); }},
      {6, "sparse/dense sampling equivalence", 30.0,
       [](std::string&) { criterion_6(); }},
      {7, "layout kernel correctness", 30.0, [](std::string&) { criterion_7(); }},
      {8, "gate-count-independent sampling", 120.0,
       [](std::string& d) { criterion_8(d); }},
      {9, "seeded determinism", 60.0, [](std::string&) { criterion_9(); }},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto start = Clock::now();
    std::string detail;
    std::string error;
    try {
      c.fn(detail);
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = error.empty() && elapsed < c.time_limit_s;
    if (error.empty() && elapsed >= c.time_limit_s) {
      error = "time limit exceeded (" + std::to_string(c.time_limit_s) + "s)";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL",
                c.number, c.name, elapsed, detail.empty() ? "" : "; ",
                detail.c_str());
    if (!error.empty()) std::printf("       %s\n", error.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
