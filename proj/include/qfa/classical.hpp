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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qfa/labels.hpp"

namespace qfa {

/// Deterministic finite automaton with a total transition function.
/// An empty accepting set is allowed.
class Dfa {
 public:
  using TransitionTable = std::map<std::pair<std::string, std::string>, std::string>;

  /// `next` is row-major over (state, symbol). Throws on shape or range
  /// errors.
  Dfa(LabelSet states, LabelSet alphabet, std::size_t initial,
      std::vector<std::size_t> accepting, std::vector<std::size_t> next);

  /// Label-keyed construction. A missing (state, symbol) pair is reported
  /// by name.
  static Dfa from_table(LabelSet states, LabelSet alphabet,
                        const std::string& initial,
                        const std::vector<std::string>& accepting,
                        const TransitionTable& delta);

  const LabelSet& states() const { return states_; }
  const LabelSet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_symbols() const { return alphabet_.size(); }
  std::size_t initial() const { return initial_; }
  bool is_accepting(std::size_t state) const { return accepting_.at(state); }
  /// Accepting state indices in ascending order.
  std::vector<std::size_t> accepting() const;

  std::size_t next(std::size_t state, std::size_t symbol) const {
    return next_[state * alphabet_.size() + symbol];
  }

  /// delta* from `from` over symbol indices.
  std::size_t run(std::size_t from, std::span<const std::size_t> symbols) const;

  /// Same machine with the accepting set dropped.
  Dfa without_accepting() const;

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
           a.initial_ == b.initial_ && a.accepting_ == b.accepting_ &&
           a.next_ == b.next_;
  }

 private:
  LabelSet states_;
  LabelSet alphabet_;
  std::size_t initial_;
  std::vector<bool> accepting_;
  std::vector<std::size_t> next_;
};

/// delta*(initial, input). Throws LabelError on a symbol outside the alphabet.
std::size_t dfa_run(const Dfa& a, std::span<const std::string> input);
bool dfa_accepts(const Dfa& a, std::span<const std::string> input);

/// 0/1 transition matrix A_sigma with A[i][j] = 1 iff delta(s_j, sigma) = s_i.
Eigen::MatrixXi dfa_symbol_matrix(const Dfa& a, std::size_t symbol);

/// f_A(x) = eta A_{x_n} ... A_{x_1} pi evaluated with integer matrices.
int dfa_matrix_eval(const Dfa& a, std::span<const std::string> input);

}  // namespace qfa
