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
#include <optional>
#include <string>
#include <utility>

#include "qfa/machines.hpp"

namespace qfa {

/// Bounded checks refuse to enumerate more strings than this.
inline constexpr std::size_t kEnumLimit = 10'000'000;
/// Residual norm above which a vector is considered outside the span.
inline constexpr double kSpanTol = 1e-10;
/// Below this a discrepancy is float noise; between it and kTol the verdict
/// is "equivalent (within tolerance)".
inline constexpr double kNoiseFloor = 1e-12;

enum class EquivMethod { bounded, algebraic };

std::string_view method_name(EquivMethod m);

struct EquivalenceVerdict {
  bool equivalent = true;
  /// Present iff not equivalent.
  std::optional<Word> counterexample;
  std::optional<double> prob_left;
  std::optional<double> prob_right;
  EquivMethod method = EquivMethod::bounded;
  /// Strings evaluated (bounded) or dimension of the reachable span
  /// (algebraic).
  std::size_t checked = 0;
  /// Largest |P1(x) - P2(x)| seen among values at or below kTol.
  double max_residual = 0.0;

  /// One human-readable line: "equivalent", "equivalent (within tolerance,
  /// max residual ...)" or "not equivalent: counterexample ...".
  std::string summary() const;
};

/// n1^2 + n2^2 - 1: strings up to this length decide equivalence of two
/// MO-1gQFA with n1 and n2 states. Throws Error on zero counts.
std::size_t equiv_bound_mo1g(std::size_t n1, std::size_t n2);

/// (k1 n1)^2 + (k2 n2)^2 - 1 for hybrid machines with k_i classical and n_i
/// quantum states.
std::size_t equiv_bound_hybrid(std::size_t k1, std::size_t n1, std::size_t k2,
                               std::size_t n2);

/// (classical, quantum) state counts used by the length bound. Models
/// without a classical part report 1 classical state; a DFA reports its
/// states as classical and one quantum state. Throws Error for a Qsm.
std::pair<std::size_t, std::size_t> state_counts(const Machine& m);

/// Length bound for a pair of acceptor machines.
std::size_t equiv_bound(const Machine& a, const Machine& b);

/// Compares acceptance on every string of length <= max_len (default: the
/// n1^2 + n2^2 - 1 bound), reporting the first discrepancy in length-then-
/// lexicographic order (symbols ordered as declared by `m1`). Throws
/// LabelError when the alphabets differ and EnumerationLimitError when the
/// string count exceeds kEnumLimit.
EquivalenceVerdict equiv_bounded(const Mo1gQfa& m1, const Mo1gQfa& m2,
                                 std::optional<std::size_t> max_len = {});

/// Span-closure decision: each machine acts linearly on its flattened
/// density operator; the reachable span of the joined system is built
/// breadth-first and the acceptance-difference functional is checked on it.
EquivalenceVerdict equiv_algebraic(const Mo1gQfa& m1, const Mo1gQfa& m2);

/// Converts both machines to MO-1gQFA and delegates. The default bound uses
/// the converted state counts.
EquivalenceVerdict equiv_any(const Machine& m1, const Machine& m2,
                             EquivMethod method = EquivMethod::bounded,
                             std::optional<std::size_t> max_len = {});

/// Bounded comparison through each machine's own acceptance semantics,
/// string by string, without conversion.
EquivalenceVerdict equiv_bounded_direct(const Machine& m1, const Machine& m2,
                                        std::size_t max_len);

}  // namespace qfa
