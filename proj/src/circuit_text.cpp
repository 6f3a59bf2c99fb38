// Copyright 2026 The h2vqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "h2vqe/circuit_text.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace h2vqe {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_index(const Token& t, std::size_t line) {
  std::size_t v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw CircuitParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  return v;
}

double parse_angle(const Token& t, std::size_t line) {
  std::istringstream ss(t.text);
  double v = 0.0;
  char rest = 0;
  if (!(ss >> v) || (ss >> rest))
    throw CircuitParseError(line, t.column, "expected an angle in radians, got '" + t.text + "'");
  return v;
}

const std::map<std::string, GateKind>& mnemonics() {
  static const std::map<std::string, GateKind> m{
      {"i", GateKind::I},   {"x", GateKind::X},   {"y", GateKind::Y},
      {"z", GateKind::Z},   {"h", GateKind::H},   {"s", GateKind::S},
      {"t", GateKind::T},   {"rx", GateKind::Rx}, {"ry", GateKind::Ry},
      {"rz", GateKind::Rz}, {"cnot", GateKind::CNOT}, {"pauli", GateKind::PauliRotation}};
  return m;
}

}  // namespace

CircuitParseError::CircuitParseError(std::size_t line, std::size_t column,
                                     const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Circuit parse_circuit_text(std::istream& is) {
  std::optional<Circuit> circuit;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];

    auto expect_args = [&](std::size_t n) {
      if (tokens.size() != n + 1)
        throw CircuitParseError(line_no, head.column,
                                "'" + head.text + "' takes " + std::to_string(n) +
                                    " argument(s), got " + std::to_string(tokens.size() - 1));
    };

    if (!circuit) {
      if (head.text != "q")
        throw CircuitParseError(line_no, head.column, "expected header 'q <n_qubits>'");
      expect_args(1);
      const std::size_t n = parse_index(tokens[1], line_no);
      if (n == 0 || n > Statevector::kMaxQubits)
        throw CircuitParseError(line_no, tokens[1].column, "qubit count must be in 1..24");
      circuit.emplace(n);
      continue;
    }
    if (head.text == "q")
      throw CircuitParseError(line_no, head.column, "duplicate 'q' header");

    const auto it = mnemonics().find(head.text);
    if (it == mnemonics().end())
      throw CircuitParseError(line_no, head.column, "unknown gate '" + head.text + "'");

    const std::size_t n = circuit->n_qubits();
    auto qubit = [&](const Token& t) {
      const std::size_t q = parse_index(t, line_no);
      if (q >= n)
        throw CircuitParseError(line_no, t.column,
                                "qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(n) + " qubits");
      return q;
    };

    const GateKind kind = it->second;
    switch (kind) {
      case GateKind::Rx:
      case GateKind::Ry:
      case GateKind::Rz:
        expect_args(2);
        circuit->add(Gate::rotation(kind, qubit(tokens[1]), parse_angle(tokens[2], line_no)));
        break;
      case GateKind::CNOT: {
        expect_args(2);
        const std::size_t c = qubit(tokens[1]);
        const std::size_t t = qubit(tokens[2]);
        if (c == t)
          throw CircuitParseError(line_no, tokens[2].column, "control and target must differ");
        circuit->add(Gate::cnot(c, t));
        break;
      }
      case GateKind::PauliRotation: {
        expect_args(2);
        if (tokens[1].text.size() != n)
          throw CircuitParseError(line_no, tokens[1].column,
                                  "Pauli string must have " + std::to_string(n) + " letters");
        PauliString axis;
        try {
          axis = PauliString::from_letters(tokens[1].text);
        } catch (const std::invalid_argument& e) {
          throw CircuitParseError(line_no, tokens[1].column, e.what());
        }
        circuit->add(Gate::pauli_rotation(axis, parse_angle(tokens[2], line_no)));
        break;
      }
      default:
        expect_args(1);
        circuit->add(Gate::single(kind, qubit(tokens[1])));
    }
  }
  if (!circuit) throw CircuitParseError(line_no + 1, 1, "missing 'q <n_qubits>' header");
  return *circuit;
}

Circuit parse_circuit_text(const std::string& text) {
  std::istringstream is(text);
  return parse_circuit_text(is);
}

}  // namespace h2vqe
