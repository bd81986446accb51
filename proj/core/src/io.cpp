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

#include "qcs/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcs {

using nlohmann::json;

namespace {

json complex_to_json(const Complex &z) {
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex entries must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Mat &m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const json &rows) {
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Mat m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != n) {
      throw std::invalid_argument("matrix rows must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = complex_from_json(rows[r][c]);
    }
  }
  return m;
}

json parse(const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("malformed JSON");
  }
  return j;
}

}  // namespace

std::string circuit_to_json(const Circuit &c) {
  json j;
  j["num_qubits"] = c.num_qubits();
  j["ancillas"] = std::vector<int>(c.ancillas().begin(), c.ancillas().end());
  json gates = json::array();
  for (const Gate &g : c.gates()) {
    json jg;
    if (g.is_cnot()) {
      jg["kind"] = "cx";
      jg["control"] = g.control;
      jg["target"] = g.target;
    } else {
      jg["kind"] = "u";
      jg["target"] = g.target;
      jg["matrix"] = matrix_to_json(g.matrix);
    }
    gates.push_back(jg);
  }
  j["gates"] = gates;
  return j.dump();
}

Circuit circuit_from_json(const std::string &text) {
  json j = parse(text);
  Circuit c(j.at("num_qubits").get<int>());
  if (j.contains("ancillas")) {
    for (int q : j["ancillas"].get<std::vector<int>>()) c.mark_ancilla(q);
  }
  for (const json &jg : j.at("gates")) {
    const std::string kind = jg.at("kind").get<std::string>();
    if (kind == "cx") {
      c.add_cx(jg.at("control").get<int>(), jg.at("target").get<int>());
    } else if (kind == "u") {
      c.add_1q(jg.at("target").get<int>(), Mat2(matrix_from_json(jg.at("matrix"))));
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
  }
  return c;
}

std::string statevector_to_json(const StateVector &s) {
  json j;
  j["num_qubits"] = s.num_qubits();
  json amps = json::array();
  for (const Complex &z : s.amplitudes()) amps.push_back(complex_to_json(z));
  j["amplitudes"] = amps;
  return j.dump();
}

StateVector statevector_from_json(const std::string &text) {
  json j = parse(text);
  const int n = j.at("num_qubits").get<int>();
  const json &amps = j.at("amplitudes");
  if (amps.size() != (size_t{1} << n)) {
    throw std::invalid_argument("amplitude count must be 2^num_qubits");
  }
  std::vector<Complex> a(amps.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = complex_from_json(amps[i]);
  return StateVector(n, std::move(a));
}

std::string unitary_to_json(const Mat &u) {
  int n = 0;
  while ((Eigen::Index{1} << n) < u.rows()) ++n;
  json j;
  j["n"] = n;
  j["rows"] = matrix_to_json(u);
  return j.dump();
}

Mat unitary_from_json(const std::string &text) {
  json j = parse(text);
  const int n = j.at("n").get<int>();
  Mat u = matrix_from_json(j.at("rows"));
  if (u.rows() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("unitary dimension must be 2^n");
  }
  return u;
}

std::string ucu_spec_to_json(const UcuSpec &spec) {
  json j;
  j["controls"] = spec.controls;
  j["targets"] = spec.targets;
  json table = json::array();
  for (const Mat &m : spec.table) table.push_back(matrix_to_json(m));
  j["table"] = table;
  return j.dump();
}

UcuSpec ucu_spec_from_json(const std::string &text) {
  json j = parse(text);
  UcuSpec spec;
  spec.controls = j.at("controls").get<std::vector<int>>();
  spec.targets = j.at("targets").get<std::vector<int>>();
  for (const json &m : j.at("table")) spec.table.push_back(matrix_from_json(m));
  spec.validate();
  return spec;
}

std::string cqsp_spec_to_json(const CqspSpec &spec) {
  json j;
  j["k"] = spec.k;
  j["n"] = spec.n;
  json states = json::array();
  for (const auto &v : spec.states) {
    json st = json::array();
    for (const Complex &z : v) st.push_back(complex_to_json(z));
    states.push_back(st);
  }
  j["states"] = states;
  return j.dump();
}

CqspSpec cqsp_spec_from_json(const std::string &text) {
  json j = parse(text);
  CqspSpec spec;
  spec.k = j.at("k").get<int>();
  spec.n = j.at("n").get<int>();
  for (const json &st : j.at("states")) {
    std::vector<Complex> v(st.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = complex_from_json(st[i]);
    spec.states.push_back(std::move(v));
  }
  spec.validate();
  return spec;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path);
  }
  out << content;
}

}  // namespace qcs
