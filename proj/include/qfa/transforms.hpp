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

#include <span>
#include <string>

#include "qfa/machines.hpp"

// Exact simulations between automaton models. Each conversion requires a
// valid source (ValidationError otherwise) and produces a machine with the
// same acceptance probability on every input.

namespace qfa {

/// "(a,b)" for every pair, first factor major.
LabelSet product_labels(const LabelSet& first, const LabelSet& second);

/// Channel with elements |delta(s, symbol)><s| over all states s. It maps
/// |s><s| to |delta(s, symbol)><delta(s, symbol)|.
QuantumOperation dfa_symbol_operation(const Dfa& a, std::size_t symbol);

/// MO-1gQFA on the DFA's own states whose acceptance is exactly the DFA's
/// 0/1 acceptance.
Mo1gQfa dfa_to_mo1g(const Dfa& a);

/// Simulation on H_Q (x) H_S, S the control DFA states: per symbol the
/// elements P_c U_sigma (x) |delta(s,c)><s| for all outcomes c and states s,
/// accepting projector I_Q (x) sum_{s in S_a} |s><s|.
Mo1gQfa cl1qfa_to_mo1g(const Cl1Qfa& m);

/// Simulation on H_S (x) H_Q: per symbol (F_sigma (x) I) o E_sigma where
/// E_sigma has elements |s><s| (x) U_{s,sigma} and F_sigma is the classical
/// DFA's symbol channel; accepting projector sum_s |s><s| (x) P_{s,a}.
Mo1gQfa qfac_to_mo1g(const Qfac1& m);

struct QcfaConversionOptions {
  /// Emit every element M^c_{s,sigma} (x) F^k_{sigma,c} |s><s| including the
  /// vanishing k != s ones.
  bool full_element_set = false;
};

/// Simulation on H_Q (x) H_S with elements M^c_{s,sigma} (x)
/// |delta(s,sigma,c)><s| and accepting projector I_Q (x) sum_{s in S_a} |s><s|.
Mo1gQfa qcfa_to_mo1g(const Qcfa1& m, const QcfaConversionOptions& opts = {});

/// Same states; the symbol channel has elements {V_{sigma,omega}}_omega.
Mo1gQfa ancilla_to_mo1g(const AncillaQfa& m);

/// delta(q_j, sigma, q_i, omega) = <q_i|E_{sigma,omega}|q_j>, outputs "1".."k"
/// with k the largest Kraus count; shorter lists are padded with zeros.
/// Throws TransformError unless the accept projector is a diagonal 0/1
/// (state-subset) projector.
AncillaQfa mo1g_to_ancilla(const Mo1gQfa& m);

/// Reindexes the QSM amplitudes as ancilla transitions and assigns the given
/// accepting states. Throws LabelError on an unknown state.
AncillaQfa qsm_to_ancilla(const Qsm& m, std::span<const std::string> accepting);

/// Embeds a CL-1QFA as the restricted 1QCFA: Theta_{s,sigma} = {P_c U_sigma}
/// independent of s, delta(s, sigma, c) = delta_control(s, c).
Qcfa1 cl1qfa_to_qcfa(const Cl1Qfa& m);

/// 1QFAC recognizing the DFA's language with certainty: qubit initialized to
/// |1>, identity unitaries, and P_{s,a} = |1><1| exactly on accepting s.
Qfac1 dfa_to_qfac_certainty(const Dfa& a);

/// 1QCFA whose classical part is the DFA and whose quantum part is a
/// one-dimensional space with a single-outcome trivial measurement.
Qcfa1 dfa_to_qcfa_certainty(const Dfa& a);

/// Converts any acceptor model to an MO-1gQFA. Throws TransformError for a
/// Qsm, which has no acceptance.
Mo1gQfa to_mo1g(const Machine& m);

}  // namespace qfa
