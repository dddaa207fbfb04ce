#include "cliffsym/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace cliffsym {

bool is_noise(InstrKind k) {
  switch (k) {
    case InstrKind::kXError:
    case InstrKind::kYError:
    case InstrKind::kZError:
    case InstrKind::kDepolarize1:
    case InstrKind::kDepolarize2:
      return true;
    default:
      return false;
  }
}

bool is_two_qubit(InstrKind k) {
  return k == InstrKind::kCX || k == InstrKind::kDepolarize2;
}

std::string_view instr_name(InstrKind k) {
  switch (k) {
    case InstrKind::kH: return "H";
    case InstrKind::kS: return "S";
    case InstrKind::kSDag: return "S_DAG";
    case InstrKind::kX: return "X";
    case InstrKind::kY: return "Y";
    case InstrKind::kZ: return "Z";
    case InstrKind::kCX: return "CX";
    case InstrKind::kM: return "M";
    case InstrKind::kR: return "R";
    case InstrKind::kXError: return "X_ERROR";
    case InstrKind::kYError: return "Y_ERROR";
    case InstrKind::kZError: return "Z_ERROR";
    case InstrKind::kDepolarize1: return "DEPOLARIZE1";
    case InstrKind::kDepolarize2: return "DEPOLARIZE2";
    case InstrKind::kTick: return "TICK";
  }
  return "?";
}

namespace {

std::optional<InstrKind> lookup_kind(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (name == "H") return InstrKind::kH;
  if (name == "S") return InstrKind::kS;
  if (name == "S_DAG") return InstrKind::kSDag;
  if (name == "X") return InstrKind::kX;
  if (name == "Y") return InstrKind::kY;
  if (name == "Z") return InstrKind::kZ;
  if (name == "CX" || name == "CNOT") return InstrKind::kCX;
  if (name == "M" || name == "MZ") return InstrKind::kM;
  if (name == "R") return InstrKind::kR;
  if (name == "X_ERROR") return InstrKind::kXError;
  if (name == "Y_ERROR") return InstrKind::kYError;
  if (name == "Z_ERROR") return InstrKind::kZError;
  if (name == "DEPOLARIZE1") return InstrKind::kDepolarize1;
  if (name == "DEPOLARIZE2") return InstrKind::kDepolarize2;
  if (name == "TICK") return InstrKind::kTick;
  return std::nullopt;
}

std::string format_probability(double p) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), p);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<Instruction> parse_circuit(std::string_view text) {
  std::vector<Instruction> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    std::string token;
    std::vector<std::string> tokens;
    std::istringstream ss{std::string(line)};
    while (ss >> token) tokens.push_back(token);
    if (tokens.empty()) continue;

    std::string head = tokens[0];
    std::optional<double> param;
    if (auto open = head.find('('); open != std::string::npos) {
      if (head.back() != ')') throw ParseError(line_no, "malformed parameter");
      std::string body = head.substr(open + 1, head.size() - open - 2);
      double v = 0;
      auto res = std::from_chars(body.data(), body.data() + body.size(), v);
      if (res.ec != std::errc{} || res.ptr != body.data() + body.size()) {
        throw ParseError(line_no, "bad probability '" + body + "'");
      }
      param = v;
      head = head.substr(0, open);
    }

    auto kind = lookup_kind(head);
    if (!kind) {
      if (head == "REPEAT" || head == "DETECTOR" || head == "OBSERVABLE_INCLUDE" ||
          head == "QUBIT_COORDS" || head == "SHIFT_COORDS") {
        throw ParseError(line_no, "unsupported instruction '" + head +
                                      "' (flat gate/noise/measure circuits only)");
      }
      throw ParseError(line_no, "unknown instruction '" + head + "'");
    }

    Instruction inst;
    inst.kind = *kind;
    inst.line = line_no;
    for (size_t i = 1; i < tokens.size(); ++i) {
      uint32_t t = 0;
      const std::string& s = tokens[i];
      auto res = std::from_chars(s.data(), s.data() + s.size(), t);
      if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ParseError(line_no, "bad target '" + s + "'");
      }
      inst.targets.push_back(t);
    }

    if (is_noise(inst.kind)) {
      if (!param) throw ParseError(line_no, "noise instruction needs a probability");
      if (*param < 0.0 || *param > 1.0) {
        throw ParseError(line_no, "probability out of [0,1]");
      }
      inst.param = *param;
    } else if (param) {
      throw ParseError(line_no, "unexpected parameter on non-noise instruction");
    }

    if (inst.kind == InstrKind::kTick) {
      if (!inst.targets.empty()) throw ParseError(line_no, "TICK takes no targets");
    } else if (inst.targets.empty()) {
      throw ParseError(line_no, "missing targets");
    }

    if (is_two_qubit(inst.kind)) {
      if (inst.targets.size() % 2 != 0) {
        throw ParseError(line_no, "odd number of targets for a two-qubit instruction");
      }
      for (size_t i = 0; i < inst.targets.size(); i += 2) {
        if (inst.targets[i] == inst.targets[i + 1]) {
          throw ParseError(line_no, "pair targets the same qubit twice");
        }
      }
    }

    out.push_back(std::move(inst));
  }
  return out;
}

std::string print_circuit(const std::vector<Instruction>& instructions) {
  std::string out;
  for (const auto& inst : instructions) {
    out += instr_name(inst.kind);
    if (is_noise(inst.kind)) {
      out += '(';
      out += format_probability(inst.param);
      out += ')';
    }
    for (uint32_t t : inst.targets) {
      out += ' ';
      out += std::to_string(t);
    }
    out += '\n';
  }
  return out;
}

CircuitSummary summarize(const std::vector<Instruction>& instructions) {
  CircuitSummary s;
  for (const auto& inst : instructions) {
    for (uint32_t t : inst.targets) {
      s.n_qubits = std::max<size_t>(s.n_qubits, size_t{t} + 1);
    }
    switch (inst.kind) {
      case InstrKind::kM:
        s.n_measurements += inst.targets.size();
        break;
      case InstrKind::kR:
        s.n_resets += inst.targets.size();
        break;
      case InstrKind::kXError:
      case InstrKind::kZError:
      case InstrKind::kYError:
        for (size_t i = 0; i < inst.targets.size(); ++i) {
          s.symbol_groups.push_back({GroupDistribution::kBernoulli, inst.param, 1});
          s.n_fault_symbols += 1;
        }
        break;
      case InstrKind::kDepolarize1:
        for (size_t i = 0; i < inst.targets.size(); ++i) {
          s.symbol_groups.push_back({GroupDistribution::kDepolarize1, inst.param, 2});
          s.n_fault_symbols += 2;
        }
        break;
      case InstrKind::kDepolarize2:
        for (size_t i = 0; i + 1 < inst.targets.size(); i += 2) {
          s.symbol_groups.push_back({GroupDistribution::kDepolarize2, inst.param, 4});
          s.n_fault_symbols += 4;
        }
        break;
      default:
        break;
    }
  }
  return s;
}

std::vector<SymbolicPauliApplication> decompose_noise(const Instruction& inst,
                                                      size_t instruction_index,
                                                      SymbolRegistry& registry) {
  if (!is_noise(inst.kind)) {
    throw std::invalid_argument("decompose_noise expects a noise instruction");
  }
  std::vector<SymbolicPauliApplication> apps;
  switch (inst.kind) {
    case InstrKind::kXError:
      for (uint32_t q : inst.targets) {
        uint32_t s = registry.add_fault_group(GroupDistribution::kBernoulli,
                                              inst.param, 1, instruction_index);
        apps.push_back({q, PauliAxis::kX, s});
      }
      break;
    case InstrKind::kZError:
      for (uint32_t q : inst.targets) {
        uint32_t s = registry.add_fault_group(GroupDistribution::kBernoulli,
                                              inst.param, 1, instruction_index);
        apps.push_back({q, PauliAxis::kZ, s});
      }
      break;
    case InstrKind::kYError:
      // Y^s = X^s Z^s up to a global phase that the mod-2 model cannot see.
      for (uint32_t q : inst.targets) {
        uint32_t s = registry.add_fault_group(GroupDistribution::kBernoulli,
                                              inst.param, 1, instruction_index);
        apps.push_back({q, PauliAxis::kX, s});
        apps.push_back({q, PauliAxis::kZ, s});
      }
      break;
    case InstrKind::kDepolarize1:
      for (uint32_t q : inst.targets) {
        uint32_t s = registry.add_fault_group(GroupDistribution::kDepolarize1,
                                              inst.param, 2, instruction_index);
        apps.push_back({q, PauliAxis::kX, s});
        apps.push_back({q, PauliAxis::kZ, static_cast<uint32_t>(s + 1)});
      }
      break;
    case InstrKind::kDepolarize2:
      for (size_t i = 0; i + 1 < inst.targets.size(); i += 2) {
        uint32_t s = registry.add_fault_group(GroupDistribution::kDepolarize2,
                                              inst.param, 4, instruction_index);
        apps.push_back({inst.targets[i], PauliAxis::kX, s});
        apps.push_back({inst.targets[i], PauliAxis::kZ, s + 1});
        apps.push_back({inst.targets[i + 1], PauliAxis::kX, s + 2});
        apps.push_back({inst.targets[i + 1], PauliAxis::kZ, s + 3});
      }
      break;
    default:
      break;
  }
  return apps;
}

}  // namespace cliffsym
