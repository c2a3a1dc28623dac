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

#include "qfa/machines.hpp"

#include <algorithm>

namespace qfa {

namespace {

void require_dim(const Matrix& m, std::size_t rows, std::size_t cols,
                 const std::string& what) {
  if (static_cast<std::size_t>(m.rows()) != rows ||
      static_cast<std::size_t>(m.cols()) != cols) {
    throw DimensionError(what + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

void require_index(std::size_t i, const LabelSet& set, const std::string& what) {
  if (i >= set.size()) throw LabelError(what + " out of range");
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v,
                                       const LabelSet& set,
                                       const std::string& what) {
  for (auto i : v) require_index(i, set, what);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool same_matrices(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), same_matrix);
}

bool same_grid(const std::vector<std::vector<Matrix>>& a,
               const std::vector<std::vector<Matrix>>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), same_matrices);
}

void check_grid(const std::vector<std::vector<Matrix>>& grid,
                const LabelSet& alphabet, const LabelSet& outputs,
                std::size_t dim, const char* what) {
  if (grid.size() != alphabet.size()) {
    throw DimensionError(std::string(what) + ": one entry per input symbol");
  }
  for (std::size_t a = 0; a < grid.size(); ++a) {
    if (grid[a].size() != outputs.size()) {
      throw DimensionError(std::string(what) + ": one matrix per output symbol");
    }
    for (std::size_t w = 0; w < grid[a].size(); ++w) {
      require_dim(grid[a][w], dim, dim,
                  std::string(what) + " V_{" + alphabet[a] + "," + outputs[w] +
                      "}");
    }
  }
}

double finish(double p, const EvalOptions& opts) {
  return opts.clamp ? std::clamp(p, 0.0, 1.0) : p;
}

std::string sub(const std::string& a, const std::string& b) {
  return "{" + a + "," + b + "}";
}

// Shared depth-first enumeration of measurement histories for the models
// whose per-step quantum action is a measurement. `step(s, symbol)` yields
// the operators and successor classical states for each outcome.
template <class Step, class Accepting>
double enumerate_histories(const Vector& psi0, std::size_t s0,
                           std::span<const std::size_t> symbols,
                           std::size_t outcomes, const Step& step,
                           const Accepting& accepting, double prune_eps) {
  double total = 0.0;
  auto recurse = [&](auto&& self, const Vector& psi, std::size_t s,
                     std::size_t depth) -> void {
    if (depth == symbols.size()) {
      if (accepting(s)) total += psi.squaredNorm();
      return;
    }
    for (std::size_t c = 0; c < outcomes; ++c) {
      auto [op, next] = step(s, symbols[depth], c);
      Vector branch = (*op) * psi;
      if (branch.squaredNorm() <= prune_eps) continue;
      self(self, branch, next, depth + 1);
    }
  };
  recurse(recurse, psi0, s0, 0);
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Mo1gQfa

Mo1gQfa::Mo1gQfa(LabelSet states, LabelSet alphabet, std::size_t initial,
                 std::vector<QuantumOperation> ops, Matrix accept_projector)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      ops_(std::move(ops)),
      accept_projector_(std::move(accept_projector)) {
  if (states_.empty()) throw LabelError("MO-1gQFA needs at least one state");
  if (alphabet_.empty()) throw LabelError("MO-1gQFA needs a non-empty alphabet");
  require_index(initial_, states_, "initial state");
  if (ops_.size() != alphabet_.size()) {
    throw DimensionError("MO-1gQFA: one operation per symbol");
  }
  for (std::size_t a = 0; a < ops_.size(); ++a) {
    if (ops_[a].dim() != dim()) {
      throw DimensionError("MO-1gQFA: E_" + alphabet_[a] +
                           " has the wrong dimension");
    }
  }
  require_dim(accept_projector_, dim(), dim(), "MO-1gQFA accept projector");
}

Mo1gQfa Mo1gQfa::with_accepting(LabelSet states, LabelSet alphabet,
                                std::size_t initial,
                                std::vector<QuantumOperation> ops,
                                std::span<const std::size_t> accepting) {
  Matrix p = projector_from_subset(states.size(), accepting);
  return Mo1gQfa(std::move(states), std::move(alphabet), initial,
                 std::move(ops), std::move(p));
}

bool operator==(const Mo1gQfa& a, const Mo1gQfa& b) {
  return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
         a.initial_ == b.initial_ && a.ops_ == b.ops_ &&
         same_matrix(a.accept_projector_, b.accept_projector_);
}

// ---------------------------------------------------------------------------
// Cl1Qfa

Cl1Qfa::Cl1Qfa(LabelSet states, LabelSet alphabet, std::size_t initial,
               std::vector<Matrix> unitaries, ProjectiveMeasurement measurement,
               Dfa control)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      unitaries_(std::move(unitaries)),
      measurement_(std::move(measurement)),
      control_(std::move(control)) {
  if (states_.empty()) throw LabelError("CL-1QFA needs at least one state");
  if (alphabet_.empty()) throw LabelError("CL-1QFA needs a non-empty alphabet");
  require_index(initial_, states_, "initial state");
  if (unitaries_.size() != alphabet_.size()) {
    throw DimensionError("CL-1QFA: one unitary per symbol");
  }
  for (std::size_t a = 0; a < unitaries_.size(); ++a) {
    require_dim(unitaries_[a], dim(), dim(), "CL-1QFA U_" + alphabet_[a]);
  }
  if (measurement_.dim() != dim()) {
    throw DimensionError("CL-1QFA: measurement has the wrong dimension");
  }
  if (!(control_.alphabet() == measurement_.outcomes())) {
    throw LabelError(
        "CL-1QFA: control DFA alphabet must equal the measurement outcomes");
  }
}

bool operator==(const Cl1Qfa& a, const Cl1Qfa& b) {
  return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
         a.initial_ == b.initial_ && same_matrices(a.unitaries_, b.unitaries_) &&
         a.measurement_ == b.measurement_ && a.control_ == b.control_;
}

// ---------------------------------------------------------------------------
// Qfac1

Qfac1::Qfac1(LabelSet quantum_states, std::size_t initial_quantum,
             Dfa classical, std::vector<Matrix> unitaries,
             std::vector<ProjectiveMeasurement> final_measurements)
    : quantum_states_(std::move(quantum_states)),
      initial_quantum_(initial_quantum),
      classical_(std::move(classical)),
      unitaries_(std::move(unitaries)),
      final_measurements_(std::move(final_measurements)) {
  if (quantum_states_.empty()) throw LabelError("1QFAC needs a quantum state");
  require_index(initial_quantum_, quantum_states_, "initial quantum state");
  if (!classical_.accepting().empty()) {
    throw LabelError("1QFAC: the classical DFA has no accepting set");
  }
  const auto& S = classical_states();
  const auto& A = alphabet();
  if (unitaries_.size() != S.size() * A.size()) {
    throw DimensionError("1QFAC: one unitary per (classical state, symbol)");
  }
  for (std::size_t s = 0; s < S.size(); ++s) {
    for (std::size_t a = 0; a < A.size(); ++a) {
      require_dim(unitary(s, a), dim(), dim(), "1QFAC U_" + sub(S[s], A[a]));
    }
  }
  if (final_measurements_.size() != S.size()) {
    throw DimensionError("1QFAC: one final measurement per classical state");
  }
  const LabelSet ar{std::string(kAccept), std::string(kReject)};
  for (std::size_t s = 0; s < S.size(); ++s) {
    const auto& m = final_measurements_[s];
    if (!(m.outcomes() == ar)) {
      throw LabelError("1QFAC: M_" + S[s] + " must have outcomes [a, r]");
    }
    if (m.dim() != dim()) {
      throw DimensionError("1QFAC: M_" + S[s] + " has the wrong dimension");
    }
  }
}

bool operator==(const Qfac1& a, const Qfac1& b) {
  return a.quantum_states_ == b.quantum_states_ &&
         a.initial_quantum_ == b.initial_quantum_ &&
         a.classical_ == b.classical_ &&
         same_matrices(a.unitaries_, b.unitaries_) &&
         a.final_measurements_ == b.final_measurements_;
}

// ---------------------------------------------------------------------------
// Qcfa1

Qcfa1::Qcfa1(LabelSet quantum_states, LabelSet classical_states,
             LabelSet alphabet, LabelSet outcomes, std::size_t initial_quantum,
             std::size_t initial_classical,
             std::vector<GeneralMeasurement> measurements,
             std::vector<std::size_t> next, std::vector<std::size_t> accepting)
    : quantum_states_(std::move(quantum_states)),
      classical_states_(std::move(classical_states)),
      alphabet_(std::move(alphabet)),
      outcomes_(std::move(outcomes)),
      initial_quantum_(initial_quantum),
      initial_classical_(initial_classical),
      measurements_(std::move(measurements)),
      next_(std::move(next)),
      accepting_(classical_states_.size(), false) {
  if (quantum_states_.empty() || classical_states_.empty()) {
    throw LabelError("1QCFA needs quantum and classical states");
  }
  if (alphabet_.empty()) throw LabelError("1QCFA needs a non-empty alphabet");
  if (outcomes_.empty()) throw LabelError("1QCFA needs at least one outcome");
  require_index(initial_quantum_, quantum_states_, "initial quantum state");
  require_index(initial_classical_, classical_states_, "initial classical state");
  const auto& S = classical_states_;
  if (measurements_.size() != S.size() * alphabet_.size()) {
    throw DimensionError("1QCFA: one measurement per (classical state, symbol)");
  }
  for (std::size_t s = 0; s < S.size(); ++s) {
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      const auto& m = measurement(s, a);
      const auto name = "1QCFA Theta_" + sub(S[s], alphabet_[a]);
      if (!(m.outcomes() == outcomes_)) {
        throw LabelError(name + " must use the machine's outcome set");
      }
      if (m.dim() != dim()) throw DimensionError(name + " has the wrong dimension");
    }
  }
  if (next_.size() != S.size() * alphabet_.size() * outcomes_.size()) {
    throw DimensionError(
        "1QCFA: classical transition must cover every (state, symbol, outcome)");
  }
  for (auto t : next_) require_index(t, S, "1QCFA transition target");
  for (auto s : accepting) {
    require_index(s, S, "1QCFA accepting state");
    accepting_[s] = true;
  }
}

std::vector<std::size_t> Qcfa1::accepting() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < accepting_.size(); ++s) {
    if (accepting_[s]) out.push_back(s);
  }
  return out;
}

Qcfa1 Qcfa1::complemented() const {
  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < accepting_.size(); ++s) {
    if (!accepting_[s]) rest.push_back(s);
  }
  return Qcfa1(quantum_states_, classical_states_, alphabet_, outcomes_,
               initial_quantum_, initial_classical_, measurements_, next_,
               std::move(rest));
}

bool operator==(const Qcfa1& a, const Qcfa1& b) {
  return a.quantum_states_ == b.quantum_states_ &&
         a.classical_states_ == b.classical_states_ &&
         a.alphabet_ == b.alphabet_ && a.outcomes_ == b.outcomes_ &&
         a.initial_quantum_ == b.initial_quantum_ &&
         a.initial_classical_ == b.initial_classical_ &&
         a.measurements_ == b.measurements_ && a.next_ == b.next_ &&
         a.accepting_ == b.accepting_;
}

// ---------------------------------------------------------------------------
// AncillaQfa

AncillaQfa::AncillaQfa(LabelSet states, LabelSet alphabet, LabelSet outputs,
                       std::size_t initial,
                       std::vector<std::vector<Matrix>> transitions,
                       std::vector<std::size_t> accepting)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      outputs_(std::move(outputs)),
      initial_(initial),
      transitions_(std::move(transitions)) {
  if (states_.empty()) throw LabelError("ancilla QFA needs at least one state");
  if (alphabet_.empty()) throw LabelError("ancilla QFA needs a non-empty alphabet");
  if (outputs_.empty()) throw LabelError("ancilla QFA needs an output symbol");
  require_index(initial_, states_, "initial state");
  check_grid(transitions_, alphabet_, outputs_, dim(), "ancilla QFA");
  accepting_ = sorted_unique(std::move(accepting), states_, "accepting state");
}

Complex AncillaQfa::amplitude(std::size_t from, std::size_t symbol,
                              std::size_t to, std::size_t output) const {
  return transition(symbol, output)(static_cast<Eigen::Index>(to),
                                    static_cast<Eigen::Index>(from));
}

Matrix AncillaQfa::stacked(std::size_t symbol) const {
  const auto n = static_cast<Eigen::Index>(dim());
  const auto k = static_cast<Eigen::Index>(outputs_.size());
  Matrix v = Matrix::Zero(n * k, n);
  for (Eigen::Index w = 0; w < k; ++w) {
    v += tensor_product(transition(symbol, static_cast<std::size_t>(w)),
                        basis_vector(outputs_.size(), static_cast<std::size_t>(w)));
  }
  return v;
}

bool operator==(const AncillaQfa& a, const AncillaQfa& b) {
  return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
         a.outputs_ == b.outputs_ && a.initial_ == b.initial_ &&
         same_grid(a.transitions_, b.transitions_) &&
         a.accepting_ == b.accepting_;
}

// ---------------------------------------------------------------------------
// Qsm

Qsm::Qsm(LabelSet states, LabelSet alphabet, LabelSet outputs,
         std::size_t initial, std::vector<std::vector<Matrix>> transitions)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      outputs_(std::move(outputs)),
      initial_(initial),
      transitions_(std::move(transitions)) {
  if (states_.empty()) throw LabelError("QSM needs at least one state");
  if (alphabet_.empty()) throw LabelError("QSM needs a non-empty alphabet");
  if (outputs_.empty()) throw LabelError("QSM needs an output symbol");
  require_index(initial_, states_, "initial state");
  check_grid(transitions_, alphabet_, outputs_, dim(), "QSM");
}

Complex Qsm::amplitude(std::size_t symbol, std::size_t from,
                       std::size_t output, std::size_t to) const {
  return transition(symbol, output)(static_cast<Eigen::Index>(to),
                                    static_cast<Eigen::Index>(from));
}

bool operator==(const Qsm& a, const Qsm& b) {
  return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
         a.outputs_ == b.outputs_ && a.initial_ == b.initial_ &&
         same_grid(a.transitions_, b.transitions_);
}

// ---------------------------------------------------------------------------

std::string_view kind_name(const Machine& m) {
  struct Names {
    std::string_view operator()(const Dfa&) const { return "dfa"; }
    std::string_view operator()(const Mo1gQfa&) const { return "mo1g"; }
    std::string_view operator()(const Cl1Qfa&) const { return "cl1qfa"; }
    std::string_view operator()(const Qfac1&) const { return "qfac"; }
    std::string_view operator()(const Qcfa1&) const { return "qcfa"; }
    std::string_view operator()(const AncillaQfa&) const { return "ancilla"; }
    std::string_view operator()(const Qsm&) const { return "qsm"; }
  };
  return std::visit(Names{}, m);
}

const LabelSet& input_alphabet(const Machine& m) {
  return std::visit([](const auto& x) -> const LabelSet& { return x.alphabet(); },
                    m);
}

// ---------------------------------------------------------------------------
// Direct semantics

double mo1g_accept_prob(const Mo1gQfa& m, std::span<const std::string> input,
                        const EvalOptions& opts) {
  const auto symbols = m.alphabet().encode(input);
  Matrix rho = basis_projector(m.dim(), m.initial());
  for (auto a : symbols) rho = m.op(a).apply(rho);
  return finish((m.accept_projector() * rho).trace().real(), opts);
}

double cl1qfa_accept_prob(const Cl1Qfa& m, std::span<const std::string> input,
                          const EvalOptions& opts) {
  const auto symbols = m.alphabet().encode(input);
  const auto& control = m.control();
  // P_c U_sigma for every (symbol, outcome), row-major.
  const std::size_t nc = m.outcomes().size();
  std::vector<Matrix> steps;
  steps.reserve(m.alphabet().size() * nc);
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    for (std::size_t c = 0; c < nc; ++c) {
      steps.push_back(m.measurement().projector(c) * m.unitary(a));
    }
  }
  auto step = [&](std::size_t s, std::size_t a, std::size_t c) {
    return std::pair{&steps[a * nc + c], control.next(s, c)};
  };
  auto accepting = [&](std::size_t s) { return control.is_accepting(s); };
  double p = enumerate_histories(basis_vector(m.dim(), m.initial()),
                                 control.initial(), symbols, nc, step,
                                 accepting, opts.prune_eps);
  return finish(p, opts);
}

double qfac_accept_prob(const Qfac1& m, std::span<const std::string> input,
                        const EvalOptions& opts) {
  const auto symbols = m.alphabet().encode(input);
  Vector psi = basis_vector(m.dim(), m.initial_quantum());
  std::size_t s = m.initial_classical();
  for (auto a : symbols) {
    psi = m.unitary(s, a) * psi;
    s = m.classical().next(s, a);
  }
  return finish((m.accept_projector(s) * psi).squaredNorm(), opts);
}

double qcfa_accept_prob(const Qcfa1& m, std::span<const std::string> input,
                        const EvalOptions& opts) {
  const auto symbols = m.alphabet().encode(input);
  auto step = [&](std::size_t s, std::size_t a, std::size_t c) {
    return std::pair{&m.measurement(s, a).op(c), m.next(s, a, c)};
  };
  auto accepting = [&](std::size_t s) { return m.is_accepting(s); };
  double p = enumerate_histories(
      basis_vector(m.dim(), m.initial_quantum()), m.initial_classical(),
      symbols, m.outcomes().size(), step, accepting, opts.prune_eps);
  return finish(p, opts);
}

double ancilla_accept_prob(const AncillaQfa& m,
                           std::span<const std::string> input,
                           const EvalOptions& opts) {
  const auto symbols = m.alphabet().encode(input);
  Matrix rho = basis_projector(m.dim(), m.initial());
  for (auto a : symbols) {
    Matrix next = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto& v : m.transitions()[a]) next.noalias() += v * rho * v.adjoint();
    rho = std::move(next);
  }
  double p = 0.0;
  for (auto q : m.accepting()) {
    p += rho(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(q)).real();
  }
  return finish(p, opts);
}

double qsm_output_prob(const Qsm& m, std::span<const std::string> input,
                       std::span<const std::string> output,
                       const EvalOptions& opts) {
  if (input.size() != output.size()) {
    throw Error("QSM output length " + std::to_string(output.size()) +
                " differs from input length " + std::to_string(input.size()));
  }
  const auto xs = m.alphabet().encode(input, "input symbol");
  const auto ys = m.outputs().encode(output, "output symbol");
  Vector psi = basis_vector(m.dim(), m.initial());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    psi = m.transition(xs[i], ys[i]) * psi;
  }
  return finish(psi.squaredNorm(), opts);
}

double accept_prob(const Machine& m, std::span<const std::string> input,
                   const EvalOptions& opts) {
  struct Eval {
    std::span<const std::string> input;
    const EvalOptions& opts;
    double operator()(const Dfa& x) const { return dfa_accepts(x, input) ? 1.0 : 0.0; }
    double operator()(const Mo1gQfa& x) const { return mo1g_accept_prob(x, input, opts); }
    double operator()(const Cl1Qfa& x) const { return cl1qfa_accept_prob(x, input, opts); }
    double operator()(const Qfac1& x) const { return qfac_accept_prob(x, input, opts); }
    double operator()(const Qcfa1& x) const { return qcfa_accept_prob(x, input, opts); }
    double operator()(const AncillaQfa& x) const { return ancilla_accept_prob(x, input, opts); }
    double operator()(const Qsm&) const {
      throw Error("a QSM has no acceptance probability; use qsm_output_prob");
    }
  };
  return std::visit(Eval{input, opts}, m);
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> violations(const Dfa&, double) { return {}; }

std::vector<Violation> violations(const Mo1gQfa& m, double tol) {
  std::vector<Violation> out;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    double r = m.op(a).completeness_residual();
    if (r > tol) {
      out.push_back({"E_" + m.alphabet()[a], "not trace-preserving", r});
    }
  }
  double r = projector_residual(m.accept_projector());
  if (r > tol) out.push_back({"P_a", "not a projector", r});
  return out;
}

std::vector<Violation> violations(const Cl1Qfa& m, double tol) {
  std::vector<Violation> out;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    double r = isometry_residual(m.unitary(a));
    if (r > tol) out.push_back({"U_" + m.alphabet()[a], "not unitary", r});
  }
  auto found = m.measurement().violations("M", tol);
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

std::vector<Violation> violations(const Qfac1& m, double tol) {
  std::vector<Violation> out;
  const auto& S = m.classical_states();
  const auto& A = m.alphabet();
  for (std::size_t s = 0; s < S.size(); ++s) {
    for (std::size_t a = 0; a < A.size(); ++a) {
      double r = isometry_residual(m.unitary(s, a));
      if (r > tol) out.push_back({"U_" + sub(S[s], A[a]), "not unitary", r});
    }
  }
  for (std::size_t s = 0; s < S.size(); ++s) {
    auto found = m.final_measurement(s).violations("M_" + S[s], tol);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::vector<Violation> violations(const Qcfa1& m, double tol) {
  std::vector<Violation> out;
  const auto& S = m.classical_states();
  const auto& A = m.alphabet();
  for (std::size_t s = 0; s < S.size(); ++s) {
    for (std::size_t a = 0; a < A.size(); ++a) {
      double r = m.measurement(s, a).completeness_residual();
      if (r > tol) {
        out.push_back({"Theta_" + sub(S[s], A[a]),
                       "measurement operators not complete", r});
      }
    }
  }
  return out;
}

std::vector<Violation> violations(const AncillaQfa& m, double tol) {
  std::vector<Violation> out;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    double r = isometry_residual(m.stacked(a));
    if (r > tol) out.push_back({"V_" + m.alphabet()[a], "not an isometry", r});
  }
  return out;
}

std::vector<Violation> violations(const Qsm& m, double tol) {
  std::vector<Violation> out;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Matrix gram = Matrix::Zero(n, n);
    for (const auto& v : m.transitions()[a]) gram.noalias() += v.adjoint() * v;
    double r = (gram - Matrix::Identity(n, n)).norm();
    if (r > tol) {
      out.push_back({"delta_" + m.alphabet()[a], "violates orthogonality", r});
    }
  }
  return out;
}

std::vector<Violation> validate_machine(const Machine& m, double tol) {
  return std::visit([tol](const auto& x) { return violations(x, tol); }, m);
}

}  // namespace qfa
