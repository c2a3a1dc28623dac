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

// Hand-built worked examples shared by the test suites.

#include <cmath>
#include <string>

#include "qfa/machines.hpp"

namespace qfa::testing {

inline const std::string kDataDir = QFA_TEST_DATA;

inline Matrix hadamard() {
  Matrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

inline Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

/// Two states over {a}; a flips; s1 initial and accepting.
inline Dfa dfa_even() {
  return Dfa(LabelSet{"s1", "s2"}, LabelSet{"a"}, 0, {0}, {1, 0});
}

/// Same transitions with s2 accepting instead.
inline Dfa dfa_odd() {
  return Dfa(LabelSet{"s1", "s2"}, LabelSet{"a"}, 0, {1}, {1, 0});
}

/// Control DFA over outcomes {0, 1} accepting words ending in 0.
inline Dfa ends_in_zero() {
  // states: other, ends0
  return Dfa(LabelSet{"other", "ends0"}, LabelSet{"0", "1"}, 0, {1},
             {1, 0, 1, 0});
}

inline ProjectiveMeasurement computational_basis() {
  return ProjectiveMeasurement(LabelSet{"0", "1"},
                               {basis_projector(2, 0), basis_projector(2, 1)});
}

/// Single qubit, U_a = H, computational-basis measurement, control language
/// "ends in 0".
inline Cl1Qfa had_cl(Dfa control = ends_in_zero()) {
  return Cl1Qfa(LabelSet{"q0", "q1"}, LabelSet{"a"}, 0, {hadamard()},
                computational_basis(), std::move(control));
}

/// One qubit; from s1, M_0 = |0><0|H leads to acc and M_1 = |1><1|H to rej;
/// acc and rej are absorbing.
inline Qcfa1 coin_qcfa() {
  const LabelSet outcomes{"0", "1"};
  const Matrix h = hadamard();
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix zero = Matrix::Zero(2, 2);
  GeneralMeasurement coin(outcomes, {basis_projector(2, 0) * h, basis_projector(2, 1) * h});
  GeneralMeasurement stay(outcomes, {id, zero});
  // classical states: s1, acc, rej
  return Qcfa1(LabelSet{"q0", "q1"}, LabelSet{"s1", "acc", "rej"}, LabelSet{"a"},
               outcomes, 0, 0, {coin, stay, stay}, {1, 2, 1, 1, 2, 2}, {1});
}

/// Every word over `alphabet` of length exactly `len`, in lexicographic
/// order of symbol indices.
inline std::vector<Word> words_of_length(const LabelSet& alphabet, std::size_t len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (const auto& s : alphabet.labels()) {
        Word x = w;
        x.push_back(s);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Every word of length at most `max_len`, shortest first.
inline std::vector<Word> words_up_to(const LabelSet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (auto& w : words_of_length(alphabet, len)) out.push_back(std::move(w));
  }
  return out;
}

inline Word w(std::string_view text) { return parse_word(text); }

}  // namespace qfa::testing
