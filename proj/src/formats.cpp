// Copyright 2026 The qfa Authors
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

#include "qfa/formats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace qfa {

using json = nlohmann::json;

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string join(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(message, path);
}

const char* type_name(const json& j) { return j.type_name(); }

// ---------------------------------------------------------------------------
// Reading

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    fail(path, std::string("expected an object, found ") + type_name(j));
  }
}

/// Rejects fields outside `required` and `optional`, and missing required ones.
void check_fields(const json& j, const std::string& path,
                  std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  expect_object(j, path);
  for (const auto& [key, value] : j.items()) {
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail(join(path, key), "unknown field '" + key + "'");
  }
  for (auto key : required) {
    if (!j.contains(key)) fail(join(path, key), "missing field '" + std::string(key) + "'");
  }
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) {
    fail(path, std::string("expected a string, found ") + type_name(j));
  }
  return j.get<std::string>();
}

LabelSet read_labels(const json& j, const std::string& path) {
  if (!j.is_array()) {
    fail(path, std::string("expected an array of labels, found ") + type_name(j));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    labels.push_back(read_string(j[i], join(path, i)));
  }
  if (labels.empty()) fail(path, "label list is empty");
  try {
    return LabelSet(std::move(labels));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::size_t read_label(const json& j, const std::string& path,
                       const LabelSet& set, std::string_view what) {
  std::string label = read_string(j, path);
  auto found = set.find(label);
  if (!found) fail(path, "unknown " + std::string(what) + " '" + label + "'");
  return *found;
}

std::vector<std::size_t> read_label_list(const json& j, const std::string& path,
                                         const LabelSet& set,
                                         std::string_view what) {
  if (!j.is_array()) {
    fail(path, std::string("expected an array of labels, found ") + type_name(j));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::size_t k = read_label(j[i], join(path, i), set, what);
    if (std::find(out.begin(), out.end(), k) != out.end()) {
      fail(join(path, i), "duplicate " + std::string(what) + " '" + set[k] + "'");
    }
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double read_real(const json& j, const std::string& path) {
  if (!j.is_number()) {
    fail(path, std::string("expected a number, found ") + type_name(j));
  }
  double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "number is not finite");
  return v;
}

Complex read_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    fail(path, "expected a complex scalar [re, im]");
  }
  return {read_real(j[0], join(path, 0)), read_real(j[1], join(path, 1))};
}

Matrix read_matrix(const json& j, const std::string& path, std::size_t rows,
                   std::size_t cols) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows) {
    fail(path, "expected a " + shape + " matrix (array of " +
                   std::to_string(rows) + " rows)");
  }
  Matrix m(idx(rows), idx(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = join(path, r);
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      fail(row_path, "expected a row of " + std::to_string(cols) +
                         " complex scalars (" + shape + " matrix)");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(idx(r), idx(c)) = read_complex(row[c], join(row_path, c));
    }
  }
  return m;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = key.find('|', start);
    parts.push_back(key.substr(start, bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return parts;
}

struct KeyPart {
  const LabelSet* set;
  std::string_view what;
};

/// Entries of an object keyed by '|'-joined labels, row-major over the
/// given parts. Every combination must be present exactly once.
std::vector<const json*> read_table(const json& j, const std::string& path,
                                    std::initializer_list<KeyPart> parts) {
  expect_object(j, path);
  std::size_t total = 1;
  for (const auto& p : parts) total *= p.set->size();
  std::vector<const json*> out(total, nullptr);
  for (const auto& [key, value] : j.items()) {
    auto labels = split_key(key);
    if (labels.size() != parts.size()) {
      fail(join(path, key), "key '" + key + "' must join " +
                                std::to_string(parts.size()) + " labels with '|'");
    }
    std::size_t flat = 0;
    std::size_t i = 0;
    for (const auto& p : parts) {
      auto found = p.set->find(labels[i]);
      if (!found) {
        fail(join(path, key), "unknown " + std::string(p.what) + " '" +
                                  labels[i] + "' in key '" + key + "'");
      }
      flat = flat * p.set->size() + *found;
      ++i;
    }
    out[flat] = &value;
  }
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (out[flat]) continue;
    // Decode the missing combination for the message.
    std::vector<std::string> labels(parts.size());
    std::size_t rest = flat;
    std::size_t i = parts.size();
    for (auto it = std::rbegin(parts); it != std::rend(parts); ++it) {
      labels[--i] = (*it->set)[rest % it->set->size()];
      rest /= it->set->size();
    }
    std::string tuple;
    for (const auto& l : labels) tuple += (tuple.empty() ? "" : ", ") + l;
    fail(path, "missing entry for (" + tuple + ")");
  }
  return out;
}

/// Object keyed by single labels, all present.
std::vector<const json*> read_keyed(const json& j, const std::string& path,
                                    const LabelSet& set, std::string_view what) {
  return read_table(j, path, {{&set, what}});
}

Dfa read_dfa_body(const json& j, const std::string& path, LabelSet states,
                  const LabelSet& alphabet, std::string_view symbol_what) {
  std::size_t initial = read_label(j["initial"], join(path, "initial"), states, "state");
  auto accepting =
      read_label_list(j["accepting"], join(path, "accepting"), states, "state");
  const std::string delta_path = join(path, "delta");
  auto cells = read_table(j["delta"], delta_path,
                          {{&states, "state"}, {&alphabet, symbol_what}});
  std::vector<std::size_t> next;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string key = states[i / alphabet.size()] + "|" + alphabet[i % alphabet.size()];
    next.push_back(read_label(*cells[i], join(delta_path, key), states, "state"));
  }
  return Dfa(std::move(states), alphabet, initial, std::move(accepting),
             std::move(next));
}

Machine read_dfa(const json& j) {
  check_fields(j, "", {"kind", "version", "states", "alphabet", "initial",
                       "accepting", "delta"});
  LabelSet states = read_labels(j["states"], "states");
  LabelSet alphabet = read_labels(j["alphabet"], "alphabet");
  return read_dfa_body(j, "", std::move(states), alphabet, "symbol");
}

Machine read_mo1g(const json& j) {
  check_fields(j, "", {"kind", "version", "states", "alphabet", "initial", "operations"},
               {"accept_projector", "accepting"});
  LabelSet states = read_labels(j["states"], "states");
  LabelSet alphabet = read_labels(j["alphabet"], "alphabet");
  const std::size_t n = states.size();
  std::size_t initial = read_label(j["initial"], "initial", states, "state");
  auto cells = read_keyed(j["operations"], "operations", alphabet, "symbol");
  std::vector<QuantumOperation> ops;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    const std::string path = join("operations", alphabet[a]);
    const json& list = *cells[a];
    if (!list.is_array() || list.empty()) {
      fail(path, "expected a non-empty array of operation elements");
    }
    std::vector<Matrix> elements;
    for (std::size_t k = 0; k < list.size(); ++k) {
      elements.push_back(read_matrix(list[k], join(path, k), n, n));
    }
    ops.emplace_back(std::move(elements));
  }
  const bool has_projector = j.contains("accept_projector");
  if (has_projector == j.contains("accepting")) {
    fail("accept_projector", "exactly one of 'accept_projector' and 'accepting' is required");
  }
  Matrix projector =
      has_projector
          ? read_matrix(j["accept_projector"], "accept_projector", n, n)
          : projector_from_subset(
                n, read_label_list(j["accepting"], "accepting", states, "state"));
  return Mo1gQfa(std::move(states), std::move(alphabet), initial, std::move(ops),
                 std::move(projector));
}

Machine read_cl1qfa(const json& j) {
  check_fields(j, "", {"kind", "version", "states", "alphabet", "outcomes",
                       "initial", "unitaries", "measurement", "control"});
  LabelSet states = read_labels(j["states"], "states");
  LabelSet alphabet = read_labels(j["alphabet"], "alphabet");
  LabelSet outcomes = read_labels(j["outcomes"], "outcomes");
  const std::size_t n = states.size();
  std::size_t initial = read_label(j["initial"], "initial", states, "state");
  auto ucells = read_keyed(j["unitaries"], "unitaries", alphabet, "symbol");
  std::vector<Matrix> unitaries;
  for (std::size_t a = 0; a < ucells.size(); ++a) {
    unitaries.push_back(read_matrix(*ucells[a], join("unitaries", alphabet[a]), n, n));
  }
  auto pcells = read_keyed(j["measurement"], "measurement", outcomes, "outcome");
  std::vector<Matrix> projectors;
  for (std::size_t c = 0; c < pcells.size(); ++c) {
    projectors.push_back(read_matrix(*pcells[c], join("measurement", outcomes[c]), n, n));
  }
  const json& control = j["control"];
  check_fields(control, "control", {"states", "initial", "accepting", "delta"});
  LabelSet control_states = read_labels(control["states"], "control.states");
  Dfa dfa = read_dfa_body(control, "control", std::move(control_states), outcomes,
                          "outcome");
  return Cl1Qfa(std::move(states), std::move(alphabet), initial,
                std::move(unitaries),
                ProjectiveMeasurement(outcomes, std::move(projectors)),
                std::move(dfa));
}

Machine read_qfac(const json& j) {
  check_fields(j, "", {"kind", "version", "quantum_states", "classical_states",
                       "alphabet", "initial_quantum", "initial_classical",
                       "unitaries", "transitions", "final_measurements"});
  LabelSet quantum = read_labels(j["quantum_states"], "quantum_states");
  LabelSet classical = read_labels(j["classical_states"], "classical_states");
  LabelSet alphabet = read_labels(j["alphabet"], "alphabet");
  const std::size_t n = quantum.size();
  std::size_t q1 = read_label(j["initial_quantum"], "initial_quantum", quantum, "quantum state");
  std::size_t s1 = read_label(j["initial_classical"], "initial_classical",
                              classical, "classical state");
  auto ucells = read_table(j["unitaries"], "unitaries",
                           {{&classical, "classical state"}, {&alphabet, "symbol"}});
  auto tcells = read_table(j["transitions"], "transitions",
                           {{&classical, "classical state"}, {&alphabet, "symbol"}});
  std::vector<Matrix> unitaries;
  std::vector<std::size_t> next;
  for (std::size_t i = 0; i < ucells.size(); ++i) {
    std::string key = classical[i / alphabet.size()] + "|" + alphabet[i % alphabet.size()];
    unitaries.push_back(read_matrix(*ucells[i], join("unitaries", key), n, n));
    next.push_back(read_label(*tcells[i], join("transitions", key), classical,
                              "classical state"));
  }
  const LabelSet ar{std::string(Qfac1::kAccept), std::string(Qfac1::kReject)};
  auto fcells = read_keyed(j["final_measurements"], "final_measurements",
                           classical, "classical state");
  std::vector<ProjectiveMeasurement> finals;
  for (std::size_t s = 0; s < fcells.size(); ++s) {
    const std::string path = join("final_measurements", classical[s]);
    auto pcells = read_keyed(*fcells[s], path, ar, "final outcome");
    std::vector<Matrix> projectors;
    for (std::size_t c = 0; c < 2; ++c) {
      projectors.push_back(read_matrix(*pcells[c], join(path, ar[c]), n, n));
    }
    finals.emplace_back(ar, std::move(projectors));
  }
  Dfa dfa(classical, alphabet, s1, {}, std::move(next));
  return Qfac1(std::move(quantum), q1, std::move(dfa), std::move(unitaries),
               std::move(finals));
}

Machine read_qcfa(const json& j) {
  check_fields(j, "", {"kind", "version", "quantum_states", "classical_states",
                       "alphabet", "outcomes", "initial_quantum",
                       "initial_classical", "measurements", "transitions",
                       "accepting"});
  LabelSet quantum = read_labels(j["quantum_states"], "quantum_states");
  LabelSet classical = read_labels(j["classical_states"], "classical_states");
  LabelSet alphabet = read_labels(j["alphabet"], "alphabet");
  LabelSet outcomes = read_labels(j["outcomes"], "outcomes");
  const std::size_t n = quantum.size();
  std::size_t q1 = read_label(j["initial_quantum"], "initial_quantum", quantum, "quantum state");
  std::size_t s1 = read_label(j["initial_classical"], "initial_classical",
                              classical, "classical state");
  auto mcells = read_table(j["measurements"], "measurements",
                           {{&classical, "classical state"}, {&alphabet, "symbol"}});
  std::vector<GeneralMeasurement> measurements;
  for (std::size_t i = 0; i < mcells.size(); ++i) {
    std::string key = classical[i / alphabet.size()] + "|" + alphabet[i % alphabet.size()];
    const std::string path = join("measurements", key);
    auto ocells = read_keyed(*mcells[i], path, outcomes, "outcome");
    std::vector<Matrix> ops;
    for (std::size_t c = 0; c < ocells.size(); ++c) {
      ops.push_back(read_matrix(*ocells[c], join(path, outcomes[c]), n, n));
    }
    measurements.emplace_back(outcomes, std::move(ops));
  }
  auto tcells = read_table(j["transitions"], "transitions",
                           {{&classical, "classical state"},
                            {&alphabet, "symbol"},
                            {&outcomes, "outcome"}});
  std::vector<std::size_t> next;
  for (std::size_t i = 0; i < tcells.size(); ++i) {
    next.push_back(read_label(*tcells[i], "transitions", classical, "classical state"));
  }
  auto accepting = read_label_list(j["accepting"], "accepting", classical, "classical state");
  return Qcfa1(std::move(quantum), std::move(classical), std::move(alphabet),
               std::move(outcomes), q1, s1, std::move(measurements),
               std::move(next), std::move(accepting));
}

struct AncillaParts {
  LabelSet states, alphabet, outputs;
  std::size_t initial;
  std::vector<std::vector<Matrix>> transitions;
};

AncillaParts read_ancilla_parts(const json& j) {
  AncillaParts p;
  p.states = read_labels(j["states"], "states");
  p.alphabet = read_labels(j["alphabet"], "alphabet");
  p.outputs = read_labels(j["output_alphabet"], "output_alphabet");
  const std::size_t n = p.states.size();
  p.initial = read_label(j["initial"], "initial", p.states, "state");
  auto cells = read_table(j["transitions"], "transitions",
                          {{&p.alphabet, "symbol"}, {&p.outputs, "output"}});
  p.transitions.resize(p.alphabet.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string key = p.alphabet[i / p.outputs.size()] + "|" + p.outputs[i % p.outputs.size()];
    p.transitions[i / p.outputs.size()].push_back(
        read_matrix(*cells[i], join("transitions", key), n, n));
  }
  return p;
}

Machine read_ancilla(const json& j) {
  check_fields(j, "", {"kind", "version", "states", "alphabet", "output_alphabet",
                       "initial", "transitions", "accepting"});
  AncillaParts p = read_ancilla_parts(j);
  auto accepting = read_label_list(j["accepting"], "accepting", p.states, "state");
  return AncillaQfa(std::move(p.states), std::move(p.alphabet),
                    std::move(p.outputs), p.initial, std::move(p.transitions),
                    std::move(accepting));
}

Machine read_qsm(const json& j) {
  check_fields(j, "", {"kind", "version", "states", "alphabet", "output_alphabet",
                       "initial", "transitions"});
  AncillaParts p = read_ancilla_parts(j);
  return Qsm(std::move(p.states), std::move(p.alphabet), std::move(p.outputs),
             p.initial, std::move(p.transitions));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..."
    // prefix; the location is reported separately.
    auto colon = what.find(": ", what.find("parse error"));
    std::string message =
        colon == std::string::npos ? what : "syntax error: " + what.substr(colon + 2);
    throw ParseError(message, "", line, column);
  } catch (const json::exception& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), "");
  }
}

// ---------------------------------------------------------------------------
// Writing

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json labels_json(const LabelSet& s) { return json(s.labels()); }

json subset_json(const LabelSet& s, const std::vector<std::size_t>& members) {
  json out = json::array();
  for (auto i : members) out.push_back(s[i]);
  return out;
}

json header(std::string_view kind) {
  json j = json::object();
  j["kind"] = kind;
  j["version"] = kFormatVersion;
  return j;
}

json delta_json(const Dfa& d) {
  json delta = json::object();
  for (std::size_t s = 0; s < d.num_states(); ++s) {
    for (std::size_t a = 0; a < d.num_symbols(); ++a) {
      delta[d.states()[s] + "|" + d.alphabet()[a]] = d.states()[d.next(s, a)];
    }
  }
  return delta;
}

struct ToJson {
  json operator()(const Dfa& d) const {
    json j = header("dfa");
    j["states"] = labels_json(d.states());
    j["alphabet"] = labels_json(d.alphabet());
    j["initial"] = d.states()[d.initial()];
    j["accepting"] = subset_json(d.states(), d.accepting());
    j["delta"] = delta_json(d);
    return j;
  }
  json operator()(const Mo1gQfa& m) const {
    json j = header("mo1g");
    j["states"] = labels_json(m.states());
    j["alphabet"] = labels_json(m.alphabet());
    j["initial"] = m.states()[m.initial()];
    json ops = json::object();
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
      json list = json::array();
      for (const auto& e : m.op(a).kraus()) list.push_back(matrix_json(e));
      ops[m.alphabet()[a]] = std::move(list);
    }
    j["operations"] = std::move(ops);
    j["accept_projector"] = matrix_json(m.accept_projector());
    return j;
  }
  json operator()(const Cl1Qfa& m) const {
    json j = header("cl1qfa");
    j["states"] = labels_json(m.states());
    j["alphabet"] = labels_json(m.alphabet());
    j["outcomes"] = labels_json(m.outcomes());
    j["initial"] = m.states()[m.initial()];
    json unitaries = json::object();
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
      unitaries[m.alphabet()[a]] = matrix_json(m.unitary(a));
    }
    j["unitaries"] = std::move(unitaries);
    json measurement = json::object();
    for (std::size_t c = 0; c < m.outcomes().size(); ++c) {
      measurement[m.outcomes()[c]] = matrix_json(m.measurement().projector(c));
    }
    j["measurement"] = std::move(measurement);
    const Dfa& d = m.control();
    json control = json::object();
    control["states"] = labels_json(d.states());
    control["initial"] = d.states()[d.initial()];
    control["accepting"] = subset_json(d.states(), d.accepting());
    control["delta"] = delta_json(d);
    j["control"] = std::move(control);
    return j;
  }
  json operator()(const Qfac1& m) const {
    json j = header("qfac");
    const LabelSet& cs = m.classical_states();
    const LabelSet& sigma = m.alphabet();
    j["quantum_states"] = labels_json(m.quantum_states());
    j["classical_states"] = labels_json(cs);
    j["alphabet"] = labels_json(sigma);
    j["initial_quantum"] = m.quantum_states()[m.initial_quantum()];
    j["initial_classical"] = cs[m.initial_classical()];
    json unitaries = json::object();
    for (std::size_t s = 0; s < cs.size(); ++s) {
      for (std::size_t a = 0; a < sigma.size(); ++a) {
        unitaries[cs[s] + "|" + sigma[a]] = matrix_json(m.unitary(s, a));
      }
    }
    j["unitaries"] = std::move(unitaries);
    j["transitions"] = delta_json(m.classical());
    json finals = json::object();
    for (std::size_t s = 0; s < cs.size(); ++s) {
      const auto& f = m.final_measurement(s);
      json pair = json::object();
      for (std::size_t c = 0; c < f.outcomes().size(); ++c) {
        pair[f.outcomes()[c]] = matrix_json(f.projector(c));
      }
      finals[cs[s]] = std::move(pair);
    }
    j["final_measurements"] = std::move(finals);
    return j;
  }
  json operator()(const Qcfa1& m) const {
    json j = header("qcfa");
    const LabelSet& cs = m.classical_states();
    const LabelSet& sigma = m.alphabet();
    const LabelSet& outs = m.outcomes();
    j["quantum_states"] = labels_json(m.quantum_states());
    j["classical_states"] = labels_json(cs);
    j["alphabet"] = labels_json(sigma);
    j["outcomes"] = labels_json(outs);
    j["initial_quantum"] = m.quantum_states()[m.initial_quantum()];
    j["initial_classical"] = cs[m.initial_classical()];
    json measurements = json::object();
    json transitions = json::object();
    for (std::size_t s = 0; s < cs.size(); ++s) {
      for (std::size_t a = 0; a < sigma.size(); ++a) {
        json ops = json::object();
        for (std::size_t c = 0; c < outs.size(); ++c) {
          ops[outs[c]] = matrix_json(m.measurement(s, a).op(c));
          transitions[cs[s] + "|" + sigma[a] + "|" + outs[c]] = cs[m.next(s, a, c)];
        }
        measurements[cs[s] + "|" + sigma[a]] = std::move(ops);
      }
    }
    j["measurements"] = std::move(measurements);
    j["transitions"] = std::move(transitions);
    j["accepting"] = subset_json(cs, m.accepting());
    return j;
  }
  template <class M>
  json ancilla_like(json j, const M& m) const {
    j["states"] = labels_json(m.states());
    j["alphabet"] = labels_json(m.alphabet());
    j["output_alphabet"] = labels_json(m.outputs());
    j["initial"] = m.states()[m.initial()];
    json transitions = json::object();
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
      for (std::size_t w = 0; w < m.outputs().size(); ++w) {
        transitions[m.alphabet()[a] + "|" + m.outputs()[w]] =
            matrix_json(m.transition(a, w));
      }
    }
    j["transitions"] = std::move(transitions);
    return j;
  }
  json operator()(const AncillaQfa& m) const {
    json j = ancilla_like(header("ancilla"), m);
    j["accepting"] = subset_json(m.states(), m.accepting());
    return j;
  }
  json operator()(const Qsm& m) const { return ancilla_like(header("qsm"), m); }
};

std::size_t depth(const json& j) {
  if (!j.is_array()) return 0;
  std::size_t d = 0;
  for (const auto& e : j) d = std::max(d, depth(e));
  return d + 1;
}

bool contains_object(const json& j) {
  if (j.is_object()) return true;
  if (!j.is_array()) return false;
  return std::any_of(j.begin(), j.end(), [](const json& e) { return contains_object(e); });
}

// Arrays of at most two levels without objects (labels, complex scalars,
// matrix rows) stay on one line; everything else is one element per line.
void write(std::string& out, const json& j, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {
        out += pad + json(key).dump() + ": ";
        write(out, value, indent + 2);
        out += ++i < j.size() ? ",\n" : "\n";
      }
      out += std::string(indent, ' ') + "}";
      return;
    }
    case json::value_t::array: {
      if (!contains_object(j) && depth(j) <= 2) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write(out, j[i], indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        write(out, j[i], indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += std::string(indent, ' ') + "]";
      return;
    }
    case json::value_t::number_float: {
      char buf[40];
      // + 0.0 turns -0 into 0, which is how the reader sees it.
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>() + 0.0);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

Machine parse(std::string_view text) {
  json j = parse_json(text);
  expect_object(j, "");
  if (!j.contains("kind")) fail("kind", "missing field 'kind'");
  if (!j.contains("version")) fail("version", "missing field 'version'");
  const std::string kind = read_string(j["kind"], "kind");
  const json& version = j["version"];
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    fail("version", "unsupported version " + version.dump() + " (expected " +
                        std::to_string(kFormatVersion) + ")");
  }
  try {
    if (kind == "dfa") return read_dfa(j);
    if (kind == "mo1g") return read_mo1g(j);
    if (kind == "cl1qfa") return read_cl1qfa(j);
    if (kind == "qfac") return read_qfac(j);
    if (kind == "qcfa") return read_qcfa(j);
    if (kind == "ancilla") return read_ancilla(j);
    if (kind == "qsm") return read_qsm(j);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    // Cross-field shape problems caught by the machine constructors.
    throw ParseError(e.what(), kind);
  }
  fail("kind", "unknown kind '" + kind + "'");
}

}  // namespace

Machine parse_machine_unchecked(std::string_view text) { return parse(text); }

Machine parse_machine(std::string_view text) {
  Machine m = parse(text);
  auto found = validate_machine(m);
  if (!found.empty()) throw ValidationError(std::move(found));
  return m;
}

std::string serialize_machine(const Machine& m) {
  std::string out;
  write(out, std::visit(ToJson{}, m), 0);
  out += "\n";
  return out;
}

Machine load_machine(const std::filesystem::path& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return validate ? parse_machine(text) : parse_machine_unchecked(text);
}

void save_machine(const std::filesystem::path& path, const Machine& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << serialize_machine(m);
  if (!out) throw Error("cannot write '" + path.string() + "'");
}

}  // namespace qfa
