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

#include "qfa/classical.hpp"

#include "qfa/error.hpp"

namespace qfa {

Dfa::Dfa(LabelSet states, LabelSet alphabet, std::size_t initial,
         std::vector<std::size_t> accepting, std::vector<std::size_t> next)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      accepting_(states_.size(), false),
      next_(std::move(next)) {
  if (states_.empty()) throw LabelError("DFA needs at least one state");
  if (alphabet_.empty()) throw LabelError("DFA needs a non-empty alphabet");
  if (initial_ >= states_.size()) throw LabelError("DFA initial state out of range");
  for (auto s : accepting) {
    if (s >= states_.size()) throw LabelError("DFA accepting state out of range");
    accepting_[s] = true;
  }
  if (next_.size() != states_.size() * alphabet_.size()) {
    throw LabelError("DFA transition table must cover every (state, symbol)");
  }
  for (auto t : next_) {
    if (t >= states_.size()) throw LabelError("DFA transition target out of range");
  }
}

Dfa Dfa::from_table(LabelSet states, LabelSet alphabet,
                    const std::string& initial,
                    const std::vector<std::string>& accepting,
                    const TransitionTable& delta) {
  const std::size_t q0 = states.index_of(initial, "state");
  std::vector<std::size_t> acc;
  for (const auto& s : accepting) acc.push_back(states.index_of(s, "state"));
  for (const auto& [key, target] : delta) {
    states.index_of(key.first, "state");
    alphabet.index_of(key.second, "symbol");
    states.index_of(target, "state");
  }
  std::vector<std::size_t> next;
  next.reserve(states.size() * alphabet.size());
  for (const auto& s : states.labels()) {
    for (const auto& a : alphabet.labels()) {
      auto it = delta.find({s, a});
      if (it == delta.end()) {
        throw LabelError("transition function is not total: missing (" + s +
                         ", " + a + ")");
      }
      next.push_back(states.index_of(it->second, "state"));
    }
  }
  return Dfa(std::move(states), std::move(alphabet), q0, std::move(acc),
             std::move(next));
}

std::vector<std::size_t> Dfa::accepting() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < accepting_.size(); ++s) {
    if (accepting_[s]) out.push_back(s);
  }
  return out;
}

std::size_t Dfa::run(std::size_t from,
                     std::span<const std::size_t> symbols) const {
  std::size_t s = from;
  for (auto a : symbols) s = next(s, a);
  return s;
}

Dfa Dfa::without_accepting() const {
  return Dfa(states_, alphabet_, initial_, {}, next_);
}

std::size_t dfa_run(const Dfa& a, std::span<const std::string> input) {
  return a.run(a.initial(), a.alphabet().encode(input));
}

bool dfa_accepts(const Dfa& a, std::span<const std::string> input) {
  return a.is_accepting(dfa_run(a, input));
}

Eigen::MatrixXi dfa_symbol_matrix(const Dfa& a, std::size_t symbol) {
  const auto n = static_cast<Eigen::Index>(a.num_states());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  for (std::size_t j = 0; j < a.num_states(); ++j) {
    m(static_cast<Eigen::Index>(a.next(j, symbol)),
      static_cast<Eigen::Index>(j)) = 1;
  }
  return m;
}

int dfa_matrix_eval(const Dfa& a, std::span<const std::string> input) {
  const auto n = static_cast<Eigen::Index>(a.num_states());
  Eigen::VectorXi v = Eigen::VectorXi::Zero(n);
  v(static_cast<Eigen::Index>(a.initial())) = 1;
  Eigen::RowVectorXi eta = Eigen::RowVectorXi::Zero(n);
  for (auto s : a.accepting()) eta(static_cast<Eigen::Index>(s)) = 1;
  for (auto symbol : a.alphabet().encode(input)) {
    v = dfa_symbol_matrix(a, symbol) * v;
  }
  return eta.dot(v);
}

}  // namespace qfa
