// Copyright 2026 The ftl Authors
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


#include "ftl/circuits/circuit_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftl {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
  throw std::runtime_error("circuit text line " + std::to_string(line_no) + ": " + msg);
}

double parse_double(const std::string& s, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    parse_error(line_no, "bad number '" + s + "'");
  }
  if (used != s.size()) parse_error(line_no, "bad number '" + s + "'");
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_circuit(std::ostream& os, const Circuit& c) {
  os << "circuit v1 qubits=" << c.num_qubits() << '\n';
  std::size_t next_mark = 0;
  const auto& marks = c.layer_marks();
  auto emit_marks = [&](std::size_t pos) {
    while (next_mark < marks.size() && marks[next_mark] == pos) {
      os << "barrier\n";
      ++next_mark;
    }
  };
  for (std::size_t i = 0; i < c.size(); ++i) {
    emit_marks(i);
    const Gate& g = c.gates()[i];
    os << gate_name(g.kind) << " q" << g.qubits[0];
    if (g.arity() == 2) os << " q" << g.qubits[1];
    for (int k = 0; k < gate_param_count(g.kind); ++k)
      os << " p" << (k + 1) << '=' << format_double(g.params[static_cast<std::size_t>(k)]);
    os << '\n';
  }
  emit_marks(c.size());
}

std::string circuit_to_string(const Circuit& c) {
  std::ostringstream os;
  write_circuit(os, c);
  return os.str();
}

Circuit read_circuit(std::istream& is) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line)) parse_error(line_no, "missing header");
  int n = -1;
  {
    std::istringstream hs(line);
    std::string magic, version, qubits;
    hs >> magic >> version >> qubits;
    if (magic != "circuit" || version != "v1" || qubits.rfind("qubits=", 0) != 0)
      parse_error(line_no, "expected 'circuit v1 qubits=<N>'");
    n = static_cast<int>(parse_double(qubits.substr(7), line_no));
    if (n < 0) parse_error(line_no, "negative qubit count");
  }
  Circuit c(n);
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    if (name == "barrier") {
      c.mark_layer_end();
      continue;
    }
    Gate g;
    try {
      g.kind = gate_kind_from_name(name);
    } catch (const std::exception& e) {
      parse_error(line_no, e.what());
    }
    std::string tok;
    for (int k = 0; k < gate_arity(g.kind); ++k) {
      if (!(ls >> tok) || tok.size() < 2 || tok[0] != 'q') parse_error(line_no, "expected qubit operand");
      g.qubits[static_cast<std::size_t>(k)] = static_cast<int>(parse_double(tok.substr(1), line_no));
    }
    for (int k = 0; k < gate_param_count(g.kind); ++k) {
      const std::string key = "p" + std::to_string(k + 1) + "=";
      if (!(ls >> tok) || tok.rfind(key, 0) != 0) parse_error(line_no, "expected " + key);
      g.params[static_cast<std::size_t>(k)] = parse_double(tok.substr(key.size()), line_no);
    }
    if (ls >> tok) parse_error(line_no, "trailing token '" + tok + "'");
    try {
      c.add(g);
    } catch (const std::exception& e) {
      parse_error(line_no, e.what());
    }
  }
  return c;
}

Circuit circuit_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_circuit(is);
}

void save_circuit(const std::string& path, const Circuit& c) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_circuit(os, c);
}

Circuit load_circuit(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  return read_circuit(is);
}

std::vector<double> rotation_params(const Circuit& c) {
  std::vector<double> out;
  for (const auto& g : c.gates())
    if (is_rotation(g.kind)) out.push_back(g.params[0]);
  return out;
}

void write_params(std::ostream& os, const std::vector<double>& params) {
  for (std::size_t i = 0; i < params.size(); ++i) os << "theta" << i << '=' << format_double(params[i]) << '\n';
}

std::vector<double> read_params(std::istream& is) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string key = "theta" + std::to_string(out.size()) + "=";
    if (line.rfind(key, 0) != 0) parse_error(line_no, "expected " + key);
    out.push_back(parse_double(line.substr(key.size()), line_no));
  }
  return out;
}

}  // namespace ftl
