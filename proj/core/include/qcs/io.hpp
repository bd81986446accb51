// Copyright 2026 The qcs authors
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

#include <string>
#include <vector>

#include "qcs/circuit.hpp"
#include "qcs/cqsp.hpp"
#include "qcs/mux.hpp"
#include "qcs/statevector.hpp"

namespace qcs {

// Circuit file format:
//   { "num_qubits": N, "ancillas": [..],
//     "gates": [ {"kind":"u","target":t,"matrix":[[[re,im],[re,im]],
//                                                 [[re,im],[re,im]]]}
//              | {"kind":"cx","control":c,"target":t} ] }
// Gate order is application order.
std::string circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const std::string &text);

// StateVector file format: { "num_qubits": n, "amplitudes": [[re,im], ...] }.
std::string statevector_to_json(const StateVector &s);
StateVector statevector_from_json(const std::string &text);

// Unitary file format: { "n": n, "rows": [[[re,im], ...], ...] }, row-major,
// dimension 2^n.
std::string unitary_to_json(const Mat &u);
Mat unitary_from_json(const std::string &text);

// UcuSpec file format: { "controls": [...], "targets": [...],
//                        "table": [matrix, ...] } indexed by integer x.
std::string ucu_spec_to_json(const UcuSpec &spec);
UcuSpec ucu_spec_from_json(const std::string &text);

// CqspSpec file format: { "k": k, "n": n, "states": [[[re,im], ...] x 2^k] },
// index i in binary per the global convention.
std::string cqsp_spec_to_json(const CqspSpec &spec);
CqspSpec cqsp_spec_from_json(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace qcs
