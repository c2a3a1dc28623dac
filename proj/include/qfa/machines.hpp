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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfa/channels.hpp"
#include "qfa/classical.hpp"
#include "qfa/error.hpp"
#include "qfa/labels.hpp"
#include "qfa/linalg.hpp"

namespace qfa {

// Constructors below check shape and labels only and throw on mismatch.
// Numerical invariants (unitarity, completeness, isometry, projector-ness)
// are reported by validate_machine so that broken machines can be loaded
// and diagnosed.

/// Measure-once one-way general QFA: one trace-preserving operation per
/// symbol and a final accepting projector.
class Mo1gQfa {
 public:
  Mo1gQfa(LabelSet states, LabelSet alphabet, std::size_t initial,
          std::vector<QuantumOperation> ops, Matrix accept_projector);

  /// Accept projector built from a set of accepting states.
  static Mo1gQfa with_accepting(LabelSet states, LabelSet alphabet,
                                std::size_t initial,
                                std::vector<QuantumOperation> ops,
                                std::span<const std::size_t> accepting);

  const LabelSet& states() const { return states_; }
  const LabelSet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return states_.size(); }
  std::size_t initial() const { return initial_; }
  const std::vector<QuantumOperation>& ops() const { return ops_; }
  const QuantumOperation& op(std::size_t symbol) const { return ops_.at(symbol); }
  const Matrix& accept_projector() const { return accept_projector_; }

  friend bool operator==(const Mo1gQfa& a, const Mo1gQfa& b);

 private:
  LabelSet states_;
  LabelSet alphabet_;
  std::size_t initial_;
  std::vector<QuantumOperation> ops_;
  Matrix accept_projector_;
};

/// One-way QFA with control language: U_sigma then a projective
/// measurement per symbol; the outcome word is fed to the control DFA.
class Cl1Qfa {
 public:
  /// `control` must have the measurement outcomes, in order, as alphabet.
  Cl1Qfa(LabelSet states, LabelSet alphabet, std::size_t initial,
         std::vector<Matrix> unitaries, ProjectiveMeasurement measurement,
         Dfa control);

  const LabelSet& states() const { return states_; }
  const LabelSet& alphabet() const { return alphabet_; }
  const LabelSet& outcomes() const { return measurement_.outcomes(); }
  std::size_t dim() const { return states_.size(); }
  std::size_t initial() const { return initial_; }
  const std::vector<Matrix>& unitaries() const { return unitaries_; }
  const Matrix& unitary(std::size_t symbol) const { return unitaries_.at(symbol); }
  const ProjectiveMeasurement& measurement() const { return measurement_; }
  const Dfa& control() const { return control_; }

  friend bool operator==(const Cl1Qfa& a, const Cl1Qfa& b);

 private:
  LabelSet states_;
  LabelSet alphabet_;
  std::size_t initial_;
  std::vector<Matrix> unitaries_;
  ProjectiveMeasurement measurement_;
  Dfa control_;
};

/// 1QFA together with classical states: the classical state selects the
/// unitary applied per symbol and the final accept/reject measurement.
class Qfac1 {
 public:
  /// Outcome labels of every final measurement.
  static constexpr std::string_view kAccept = "a";
  static constexpr std::string_view kReject = "r";

  /// `classical` runs over the same alphabet and has no accepting states.
  /// `unitaries` is row-major over (classical state, symbol);
  /// `final_measurements` has one {a, r} measurement per classical state.
  Qfac1(LabelSet quantum_states, std::size_t initial_quantum, Dfa classical,
        std::vector<Matrix> unitaries,
        std::vector<ProjectiveMeasurement> final_measurements);

  const LabelSet& quantum_states() const { return quantum_states_; }
  const LabelSet& classical_states() const { return classical_.states(); }
  const LabelSet& alphabet() const { return classical_.alphabet(); }
  std::size_t dim() const { return quantum_states_.size(); }
  std::size_t initial_quantum() const { return initial_quantum_; }
  std::size_t initial_classical() const { return classical_.initial(); }
  const Dfa& classical() const { return classical_; }
  const Matrix& unitary(std::size_t state, std::size_t symbol) const {
    return unitaries_.at(state * alphabet().size() + symbol);
  }
  const std::vector<Matrix>& unitaries() const { return unitaries_; }
  const ProjectiveMeasurement& final_measurement(std::size_t state) const {
    return final_measurements_.at(state);
  }
  const std::vector<ProjectiveMeasurement>& final_measurements() const {
    return final_measurements_;
  }
  const Matrix& accept_projector(std::size_t state) const {
    return final_measurements_.at(state).projector(0);
  }

  friend bool operator==(const Qfac1& a, const Qfac1& b);

 private:
  LabelSet quantum_states_;
  std::size_t initial_quantum_;
  Dfa classical_;
  std::vector<Matrix> unitaries_;
  std::vector<ProjectiveMeasurement> final_measurements_;
};

/// One-way QFA with quantum and classical states: per step a general
/// measurement chosen by (classical state, symbol) whose outcome drives the
/// classical transition.
class Qcfa1 {
 public:
  /// `measurements` is row-major over (classical state, symbol), each with
  /// `outcomes` as outcome set. `next` is row-major over
  /// (classical state, symbol, outcome).
  Qcfa1(LabelSet quantum_states, LabelSet classical_states, LabelSet alphabet,
        LabelSet outcomes, std::size_t initial_quantum,
        std::size_t initial_classical,
        std::vector<GeneralMeasurement> measurements,
        std::vector<std::size_t> next, std::vector<std::size_t> accepting);

  const LabelSet& quantum_states() const { return quantum_states_; }
  const LabelSet& classical_states() const { return classical_states_; }
  const LabelSet& alphabet() const { return alphabet_; }
  const LabelSet& outcomes() const { return outcomes_; }
  std::size_t dim() const { return quantum_states_.size(); }
  std::size_t initial_quantum() const { return initial_quantum_; }
  std::size_t initial_classical() const { return initial_classical_; }
  const GeneralMeasurement& measurement(std::size_t state,
                                        std::size_t symbol) const {
    return measurements_.at(state * alphabet_.size() + symbol);
  }
  const std::vector<GeneralMeasurement>& measurements() const {
    return measurements_;
  }
  std::size_t next(std::size_t state, std::size_t symbol,
                   std::size_t outcome) const {
    return next_[(state * alphabet_.size() + symbol) * outcomes_.size() +
                 outcome];
  }
  const std::vector<std::size_t>& transitions() const { return next_; }
  bool is_accepting(std::size_t state) const { return accepting_.at(state); }
  std::vector<std::size_t> accepting() const;

  /// Same machine with the complementary accepting set.
  Qcfa1 complemented() const;

  friend bool operator==(const Qcfa1& a, const Qcfa1& b);

 private:
  LabelSet quantum_states_;
  LabelSet classical_states_;
  LabelSet alphabet_;
  LabelSet outcomes_;
  std::size_t initial_quantum_;
  std::size_t initial_classical_;
  std::vector<GeneralMeasurement> measurements_;
  std::vector<std::size_t> next_;
  std::vector<bool> accepting_;
};

/// Ancilla QFA. For every symbol sigma and output omega the transition
/// amplitudes form V_{sigma,omega} with V[p][q] = delta(q, sigma, p, omega).
class AncillaQfa {
 public:
  /// `transitions[sigma][omega]` is V_{sigma,omega}.
  AncillaQfa(LabelSet states, LabelSet alphabet, LabelSet outputs,
             std::size_t initial,
             std::vector<std::vector<Matrix>> transitions,
             std::vector<std::size_t> accepting);

  const LabelSet& states() const { return states_; }
  const LabelSet& alphabet() const { return alphabet_; }
  const LabelSet& outputs() const { return outputs_; }
  std::size_t dim() const { return states_.size(); }
  std::size_t initial() const { return initial_; }
  const Matrix& transition(std::size_t symbol, std::size_t output) const {
    return transitions_.at(symbol).at(output);
  }
  const std::vector<std::vector<Matrix>>& transitions() const {
    return transitions_;
  }
  /// delta(from, symbol, to, output).
  Complex amplitude(std::size_t from, std::size_t symbol, std::size_t to,
                    std::size_t output) const;
  /// V_sigma = sum_omega V_{sigma,omega} (x) |omega>, an
  /// (|Q||Omega|) x |Q| matrix on H_Q (x) H_Omega.
  Matrix stacked(std::size_t symbol) const;
  /// Accepting state indices in ascending order.
  const std::vector<std::size_t>& accepting() const { return accepting_; }

  friend bool operator==(const AncillaQfa& a, const AncillaQfa& b);

 private:
  LabelSet states_;
  LabelSet alphabet_;
  LabelSet outputs_;
  std::size_t initial_;
  std::vector<std::vector<Matrix>> transitions_;
  std::vector<std::size_t> accepting_;
};

/// Quantum sequential machine. `transitions[sigma][omega]` holds
/// V[t][s] = delta(sigma, s, omega, t).
class Qsm {
 public:
  Qsm(LabelSet states, LabelSet alphabet, LabelSet outputs, std::size_t initial,
      std::vector<std::vector<Matrix>> transitions);

  const LabelSet& states() const { return states_; }
  const LabelSet& alphabet() const { return alphabet_; }
  const LabelSet& outputs() const { return outputs_; }
  std::size_t dim() const { return states_.size(); }
  std::size_t initial() const { return initial_; }
  const Matrix& transition(std::size_t symbol, std::size_t output) const {
    return transitions_.at(symbol).at(output);
  }
  const std::vector<std::vector<Matrix>>& transitions() const {
    return transitions_;
  }
  /// delta(symbol, from, output, to).
  Complex amplitude(std::size_t symbol, std::size_t from, std::size_t output,
                    std::size_t to) const;

  friend bool operator==(const Qsm& a, const Qsm& b);

 private:
  LabelSet states_;
  LabelSet alphabet_;
  LabelSet outputs_;
  std::size_t initial_;
  std::vector<std::vector<Matrix>> transitions_;
};

using Machine =
    std::variant<Dfa, Mo1gQfa, Cl1Qfa, Qfac1, Qcfa1, AncillaQfa, Qsm>;

/// "dfa", "mo1g", "cl1qfa", "qfac", "qcfa", "ancilla" or "qsm".
std::string_view kind_name(const Machine& m);
const LabelSet& input_alphabet(const Machine& m);

// ---------------------------------------------------------------------------
// Direct semantics

/// Branches of history enumeration whose squared norm is at most this are
/// dropped.
inline constexpr double kPruneEps = 1e-15;

struct EvalOptions {
  double prune_eps = kPruneEps;
  /// Clamp the result into [0, 1]; turn off to inspect raw values.
  bool clamp = true;
};

/// Tr(P_a E_{x_n} o ... o E_{x_1}(|q1><q1|)).
double mo1g_accept_prob(const Mo1gQfa& m, std::span<const std::string> input,
                        const EvalOptions& opts = {});

/// Sum over outcome words y accepted by the control DFA of
/// ||prod_i P_{y_i} U_{x_i} |q1>||^2, by depth-first history enumeration.
double cl1qfa_accept_prob(const Cl1Qfa& m, std::span<const std::string> input,
                          const EvalOptions& opts = {});

/// ||P_{s_{n+1},a} U_{s_n,x_n} ... U_{s_1,x_1} |q1>||^2.
double qfac_accept_prob(const Qfac1& m, std::span<const std::string> input,
                        const EvalOptions& opts = {});

/// Sum over outcome histories of chi_a(s_{n+1}) ||M ... M |q1>||^2.
double qcfa_accept_prob(const Qcfa1& m, std::span<const std::string> input,
                        const EvalOptions& opts = {});

/// Evolves by rho -> sum_omega V rho V^dagger, then Tr(P_{Q_a} rho).
double ancilla_accept_prob(const AncillaQfa& m,
                           std::span<const std::string> input,
                           const EvalOptions& opts = {});

/// p(y|x) = ||prod_i V_{x_i,y_i} |s1>||^2. Throws Error when the lengths
/// differ and LabelError on unknown symbols.
double qsm_output_prob(const Qsm& m, std::span<const std::string> input,
                       std::span<const std::string> output,
                       const EvalOptions& opts = {});

/// Acceptance probability of any acceptor model (a DFA gives 0 or 1).
/// Throws Error for a Qsm, which has no acceptance.
double accept_prob(const Machine& m, std::span<const std::string> input,
                   const EvalOptions& opts = {});

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> violations(const Dfa& m, double tol = kTol);
std::vector<Violation> violations(const Mo1gQfa& m, double tol = kTol);
std::vector<Violation> violations(const Cl1Qfa& m, double tol = kTol);
std::vector<Violation> violations(const Qfac1& m, double tol = kTol);
std::vector<Violation> violations(const Qcfa1& m, double tol = kTol);
std::vector<Violation> violations(const AncillaQfa& m, double tol = kTol);
std::vector<Violation> violations(const Qsm& m, double tol = kTol);

/// Empty iff every numerical invariant of the machine holds within tol.
std::vector<Violation> validate_machine(const Machine& m, double tol = kTol);
inline std::vector<Violation> violations(const Machine& m, double tol = kTol) {
  return validate_machine(m, tol);
}

/// Throws ValidationError listing every violation.
template <class M>
void require_valid(const M& m, double tol = kTol) {
  auto found = violations(m, tol);
  if (!found.empty()) throw ValidationError(std::move(found));
}

}  // namespace qfa
