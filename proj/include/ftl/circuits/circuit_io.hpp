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


#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ftl/core/circuit.hpp"

namespace ftl {

// Line-based text format:
//   circuit v1 qubits=<N>
//   <kind> q<i>[ q<j>][ p1=<x> p2=<y> p3=<z>]
//   barrier                      (closes a layer)
// Floats are written with 17 significant digits so parsing round-trips.

std::string format_double(double x);

void write_circuit(std::ostream& os, const Circuit& c);
std::string circuit_to_string(const Circuit& c);

/// Throws std::runtime_error with the offending line number on bad input.
Circuit read_circuit(std::istream& is);
Circuit circuit_from_string(const std::string& text);

void save_circuit(const std::string& path, const Circuit& c);
Circuit load_circuit(const std::string& path);

/// Sidecar parameter file: one `theta<i>=<x>` line per rotation angle, in
/// gate order (RX, RY, RZ, CRZ).
std::vector<double> rotation_params(const Circuit& c);
void write_params(std::ostream& os, const std::vector<double>& params);
std::vector<double> read_params(std::istream& is);

}  // namespace ftl
