#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "cliffsym/circuit_gen.hpp"
#include "cliffsym/oracle.hpp"
#include "cliffsym/sampler.hpp"
#include "cliffsym/tableau.hpp"

namespace {

using namespace cliffsym;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string describe_symbol(const SymbolRegistry& registry,
                            const std::vector<Instruction>& instructions,
                            uint32_t id) {
  const SymbolOrigin& origin = registry.origin(id);
  const SymbolGroup& group = registry.group(origin.group_id);
  const Instruction& inst = instructions.at(origin.instruction_index);

  std::string out = "s" + std::to_string(id) + ": ";
  out += instr_name(inst.kind);
  if (inst.line > 0) out += " (line " + std::to_string(inst.line) + ")";
  out += " targets";
  for (uint32_t t : inst.targets) out += " " + std::to_string(t);
  switch (origin.kind) {
    case SymbolKind::kFault: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%g", group.param);
      out += ", fault";
      switch (group.distribution) {
        case GroupDistribution::kBernoulli:
          out += std::string(", Bernoulli(p=") + buf + ")";
          break;
        case GroupDistribution::kDepolarize1:
          out += std::string(", joint depolarize1(p=") + buf + ")";
          break;
        case GroupDistribution::kDepolarize2:
          out += std::string(", joint depolarize2(p=") + buf + ")";
          break;
        default:
          break;
      }
      break;
    }
    case SymbolKind::kMeasurementRandomness:
      out += ", measurement randomness, fair coin";
      break;
    case SymbolKind::kConstant:
      out += ", constant";
      break;
  }
  return out;
}

struct CommonOpts {
  std::string in_path;
  std::string out_path;
  uint64_t seed = 0;
  size_t shots = 1;
};

int cmd_sample(const CommonOpts& opts, const std::string& format,
               const std::string& dump_assignments, unsigned threads) {
  std::string text = read_input(opts.in_path);
  auto instructions = parse_circuit(text);

  auto t0 = Clock::now();
  InitResult init = run_initialization(instructions);
  double init_s = seconds_since(t0);

  auto t1 = Clock::now();
  SymbolAssignmentBatch batch = draw_assignments(init.registry, opts.shots, opts.seed);
  SampleMatrix samples = sample(init.expressions, batch, threads);
  std::string encoded =
      encode_shots(samples, format == "b8" ? ShotFormat::kB8 : ShotFormat::k01);
  double sampling_s = seconds_since(t1);

  write_output(opts.out_path, encoded);
  if (!dump_assignments.empty()) {
    std::string dump;
    for (size_t s = 0; s < batch.n_symbols(); ++s) {
      for (size_t j = 0; j < batch.n_shots(); ++j) {
        dump += batch.data.get_bit(s, j) ? '1' : '0';
      }
      dump += '\n';
    }
    write_output(dump_assignments, dump);
  }
  std::fprintf(stderr, "init_seconds=%.6f sampling_seconds=%.6f\n", init_s,
               sampling_s);
  return 0;
}

int cmd_analyze(const CommonOpts& opts) {
  std::string text = read_input(opts.in_path);
  auto instructions = parse_circuit(text);
  InitResult init = run_initialization(instructions);

  std::string out;
  for (size_t k = 0; k < init.expressions.size(); ++k) {
    out += "m" + std::to_string(k + 1) + " = " +
           expression_to_string(init.expressions[k]) + "\n";
  }
  if (init.registry.size() > 1) {
    out += "# symbols:\n";
    for (uint32_t id = 1; id < init.registry.size(); ++id) {
      out += "#   " + describe_symbol(init.registry, instructions, id) + "\n";
    }
  }
  write_output(opts.out_path, out);
  return 0;
}

int cmd_verify(const CommonOpts& opts, size_t assignments) {
  std::string text = read_input(opts.in_path);
  auto instructions = parse_circuit(text);
  InitResult init = run_initialization(instructions);
  CircuitSummary& summary = init.summary;

  bool all_ok = true;
  std::mt19937_64 rng(opts.seed ^ 0x5eedf00dull);

  // 1. Forced-assignment equivalence against the concrete re-simulator.
  {
    size_t mismatches = 0;
    for (size_t k = 0; k < assignments; ++k) {
      BitVec assign(init.registry.size());
      assign.set(0, true);
      for (size_t s = 1; s < init.registry.size(); ++s) assign.set(s, rng() & 1);
      std::mt19937_64 dummy(0);
      ConcreteShot shot = run_concrete_shot(instructions, &assign, dummy);
      for (size_t m = 0; m < shot.measurements.size(); ++m) {
        if ((shot.measurements[m] != 0) != init.expressions[m].evaluate(assign)) {
          ++mismatches;
        }
      }
    }
    bool ok = mismatches == 0;
    all_ok &= ok;
    std::printf("%s concretization equivalence: %zu assignments, %zu mismatches\n",
                ok ? "[pass]" : "[FAIL]", assignments, mismatches);
  }

  // 2. Per-measurement marginals against concrete Monte Carlo.
  if (!init.expressions.empty()) {
    const size_t shots = std::max<size_t>(opts.shots, 10000);
    SymbolAssignmentBatch batch = draw_assignments(init.registry, shots, opts.seed);
    SampleMatrix symbolic = sample(init.expressions, batch);
    auto concrete = run_concrete(instructions, opts.seed + 1, shots);
    double worst_z = 0;
    for (size_t k = 0; k < init.expressions.size(); ++k) {
      double p_sym = 0, p_con = 0;
      for (size_t j = 0; j < shots; ++j) p_sym += symbolic.data.get_bit(k, j);
      for (const auto& s : concrete) p_con += s[k];
      p_sym /= static_cast<double>(shots);
      p_con /= static_cast<double>(shots);
      double pool = 0.5 * (p_sym + p_con);
      double sigma = std::sqrt(std::max(pool * (1 - pool), 1e-9) * 2.0 /
                               static_cast<double>(shots));
      worst_z = std::max(worst_z, std::abs(p_sym - p_con) / sigma);
    }
    bool ok = worst_z <= 4.0;
    all_ok &= ok;
    std::printf("%s marginal agreement: %zu shots, worst z-score %.2f\n",
                ok ? "[pass]" : "[FAIL]", shots, worst_z);
  }

  // 3. Exact distribution for small noiseless circuits.
  bool noiseless = true;
  for (const auto& inst : instructions) noiseless &= !is_noise(inst.kind);
  if (noiseless && summary.n_qubits <= 12 && summary.n_measurements <= 14 &&
      !init.expressions.empty()) {
    const size_t shots = 20000;
    auto exact = exact_distribution(instructions);
    SymbolAssignmentBatch batch = draw_assignments(init.registry, shots, opts.seed);
    SampleMatrix symbolic = sample(init.expressions, batch);
    std::map<std::string, double> emp;
    for (size_t j = 0; j < shots; ++j) {
      std::string key;
      for (size_t k = 0; k < init.expressions.size(); ++k) {
        key += symbolic.data.get_bit(k, j) ? '1' : '0';
      }
      emp[key] += 1.0 / static_cast<double>(shots);
    }
    double tvd = 0;
    for (const auto& [k, v] : exact) {
      auto it = emp.find(k);
      tvd += std::abs(v - (it == emp.end() ? 0.0 : it->second));
    }
    for (const auto& [k, v] : emp) {
      if (!exact.count(k)) tvd += v;
    }
    tvd /= 2.0;
    bool ok = tvd < 0.05;
    all_ok &= ok;
    std::printf("%s exact distribution: %zu shots, total variation %.4f\n",
                ok ? "[pass]" : "[FAIL]", shots, tvd);
  } else {
    std::printf("[skip] exact distribution (needs a small noiseless circuit)\n");
  }

  std::printf("verify: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}

int cmd_bench(const CommonOpts& opts, const std::vector<size_t>& sizes,
              const std::string& family_arg, unsigned threads) {
  std::vector<BenchFamily> families;
  if (family_arg == "a" || family_arg == "all") {
    families.push_back(BenchFamily::kSparseCnot);
  }
  if (family_arg == "b" || family_arg == "all") {
    families.push_back(BenchFamily::kDenseCnot);
  }
  if (family_arg == "c" || family_arg == "all") {
    families.push_back(BenchFamily::kDenseCnotDepolarize);
  }

  std::printf("family,n,init_seconds,sampling_seconds,shots\n");
  for (BenchFamily family : families) {
    for (size_t n : sizes) {
      auto instructions = generate_bench_circuit(family, n, opts.seed);

      auto t0 = Clock::now();
      InitResult init = run_initialization(instructions);
      double init_s = seconds_since(t0);

      auto t1 = Clock::now();
      SymbolAssignmentBatch batch =
          draw_assignments(init.registry, opts.shots, opts.seed);
      SampleMatrix samples = sample(init.expressions, batch, threads);
      double sampling_s = seconds_since(t1);
      (void)samples;

      std::printf("%s,%zu,%.6f,%.6f,%zu\n", bench_family_name(family), n, init_s,
                  sampling_s, opts.shots);
      std::fflush(stdout);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer circuit sampler with symbolic fault phases"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string format = "01";
  std::string dump_assignments;
  unsigned threads = 1;
  size_t assignments = 50;
  std::vector<size_t> bench_sizes{100};
  std::string family = "all";

  auto add_common = [&](CLI::App* cmd, bool with_shots) {
    cmd->add_option("--in", opts.in_path, "input circuit file (default stdin)");
    cmd->add_option("--out", opts.out_path, "output file (default stdout)");
    cmd->add_option("--seed", opts.seed, "64-bit sampling seed");
    if (with_shots) {
      cmd->add_option("--shots", opts.shots, "number of shots")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* sample_cmd = app.add_subcommand("sample", "sample measurement outcomes");
  add_common(sample_cmd, true);
  sample_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"01", "b8"}));
  sample_cmd->add_option("--dump-assignments", dump_assignments,
                         "write drawn symbol assignments (unstable debug format)");
  sample_cmd->add_option("--threads", threads, "sampling worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "print measurement outcomes as symbol expressions");
  add_common(analyze_cmd, false);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "cross-check against reference oracles");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--assignments", assignments,
                         "forced assignments for the equivalence check");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time init and sampling on generated circuits");
  add_common(bench_cmd, true);
  bench_cmd->add_option("--n", bench_sizes, "qubit counts to run");
  bench_cmd->add_option("--family", family, "circuit family")
      ->check(CLI::IsMember({"a", "b", "c", "all"}));
  bench_cmd->add_option("--threads", threads, "sampling worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sample_cmd->parsed()) {
      return cmd_sample(opts, format, dump_assignments, threads);
    }
    if (analyze_cmd->parsed()) return cmd_analyze(opts);
    if (verify_cmd->parsed()) return cmd_verify(opts, assignments);
    if (bench_cmd->parsed()) return cmd_bench(opts, bench_sizes, family, threads);
  } catch (const cliffsym::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
