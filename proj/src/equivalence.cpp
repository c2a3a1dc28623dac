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

#include "qfa/equivalence.hpp"

#include <cmath>
#include <cstdio>
#include <deque>

#include "qfa/transforms.hpp"

namespace qfa {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

/// Index of each of m1's symbols in m2's alphabet.
std::vector<std::size_t> align_alphabets(const LabelSet& a, const LabelSet& b) {
  if (!a.same_members(b)) {
    throw LabelError("equivalence needs machines over the same input alphabet");
  }
  std::vector<std::size_t> out;
  for (const auto& s : a.labels()) out.push_back(b.index_of(s));
  return out;
}

std::size_t count_strings(std::size_t symbols, std::size_t max_len) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += level;
    if (total > kEnumLimit) {
      throw EnumerationLimitError(
          "bounded check would enumerate more than " +
          std::to_string(kEnumLimit) + " strings (length <= " +
          std::to_string(max_len) + " over " + std::to_string(symbols) +
          " symbols); use the algebraic method");
    }
    if (len < max_len && level > kEnumLimit / std::max<std::size_t>(symbols, 1)) {
      level = kEnumLimit + 1;
    } else {
      level *= symbols;
    }
  }
  return total;
}

std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", p);
  return buf;
}

double accept(const Mo1gQfa& m, const Matrix& rho) {
  return (m.accept_projector() * rho).trace().real();
}

// Tracks the verdict while words are visited.
struct Recorder {
  EquivalenceVerdict verdict;
  std::optional<std::vector<std::size_t>> best;

  // True if this word becomes the current counterexample.
  bool observe(const std::vector<std::size_t>& word, double p1, double p2) {
    ++verdict.checked;
    double diff = std::abs(p1 - p2);
    if (diff <= kTol) {
      verdict.max_residual = std::max(verdict.max_residual, diff);
      return false;
    }
    if (best && best->size() <= word.size()) return false;
    best = word;
    verdict.prob_left = std::clamp(p1, 0.0, 1.0);
    verdict.prob_right = std::clamp(p2, 0.0, 1.0);
    return true;
  }

  EquivalenceVerdict finish(const LabelSet& alphabet) && {
    if (best) {
      verdict.equivalent = false;
      verdict.counterexample = alphabet.decode(*best);
    }
    return std::move(verdict);
  }
};

// Row-major flattening: vec(E rho E^dagger) = (E (x) conj(E)) vec(rho).
Matrix superoperator(const QuantumOperation& op) {
  const auto n = idx(op.dim());
  Matrix s = Matrix::Zero(n * n, n * n);
  for (const auto& e : op.kraus()) s += tensor_product(e, e.conjugate());
  return s;
}

Vector flatten(const Matrix& m) {
  Vector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  }
  return v;
}

// Row vector eta with eta . vec(rho) = Tr(P rho).
Vector acceptance_functional(const Matrix& p) {
  return flatten(p.transpose());
}

}  // namespace

std::string_view method_name(EquivMethod m) {
  return m == EquivMethod::bounded ? "bounded" : "algebraic";
}

std::string EquivalenceVerdict::summary() const {
  if (!equivalent) {
    std::string out = "not equivalent: counterexample '" +
                      format_word(*counterexample) + "'";
    if (prob_left && prob_right) {
      out += " (" + format_prob(*prob_left) + " vs " + format_prob(*prob_right) +
             ")";
    }
    return out;
  }
  if (max_residual > kNoiseFloor) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", max_residual);
    return std::string("equivalent (within tolerance, max residual ") + buf + ")";
  }
  return "equivalent";
}

std::size_t equiv_bound_mo1g(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw Error("state counts must be positive");
  return n1 * n1 + n2 * n2 - 1;
}

std::size_t equiv_bound_hybrid(std::size_t k1, std::size_t n1, std::size_t k2,
                               std::size_t n2) {
  if (k1 == 0 || n1 == 0 || k2 == 0 || n2 == 0) {
    throw Error("state counts must be positive");
  }
  return equiv_bound_mo1g(k1 * n1, k2 * n2);
}

std::pair<std::size_t, std::size_t> state_counts(const Machine& m) {
  struct Counts {
    using R = std::pair<std::size_t, std::size_t>;
    R operator()(const Dfa& x) const { return {x.num_states(), 1}; }
    R operator()(const Mo1gQfa& x) const { return {1, x.dim()}; }
    R operator()(const Cl1Qfa& x) const { return {x.control().num_states(), x.dim()}; }
    R operator()(const Qfac1& x) const { return {x.classical_states().size(), x.dim()}; }
    R operator()(const Qcfa1& x) const { return {x.classical_states().size(), x.dim()}; }
    R operator()(const AncillaQfa& x) const { return {1, x.dim()}; }
    R operator()(const Qsm&) const {
      throw Error("a QSM is not an acceptor; equivalence is undefined");
    }
  };
  return std::visit(Counts{}, m);
}

std::size_t equiv_bound(const Machine& a, const Machine& b) {
  auto [k1, n1] = state_counts(a);
  auto [k2, n2] = state_counts(b);
  return equiv_bound_hybrid(k1, n1, k2, n2);
}

EquivalenceVerdict equiv_bounded(const Mo1gQfa& m1, const Mo1gQfa& m2,
                                 std::optional<std::size_t> max_len) {
  const auto to_m2 = align_alphabets(m1.alphabet(), m2.alphabet());
  const std::size_t limit = max_len.value_or(equiv_bound_mo1g(m1.dim(), m2.dim()));
  const std::size_t nsym = m1.alphabet().size();
  count_strings(nsym, limit);

  Recorder rec;
  rec.verdict.method = EquivMethod::bounded;
  // Depth-first over words in lexicographic order, sharing prefixes. The
  // first violation found at a given length is the lexicographically least
  // of that length; afterwards only shorter words can improve on it.
  std::size_t depth_cap = limit;
  std::vector<std::size_t> word;
  auto visit = [&](auto&& self, const Matrix& r1, const Matrix& r2) -> void {
    if (rec.observe(word, accept(m1, r1), accept(m2, r2))) {
      depth_cap = word.size();
    }
    if (word.size() >= depth_cap) return;
    for (std::size_t a = 0; a < nsym; ++a) {
      if (word.size() >= depth_cap) return;
      word.push_back(a);
      self(self, m1.op(a).apply(r1), m2.op(to_m2[a]).apply(r2));
      word.pop_back();
    }
  };
  visit(visit, basis_projector(m1.dim(), m1.initial()),
        basis_projector(m2.dim(), m2.initial()));
  return std::move(rec).finish(m1.alphabet());
}

EquivalenceVerdict equiv_algebraic(const Mo1gQfa& m1, const Mo1gQfa& m2) {
  const auto to_m2 = align_alphabets(m1.alphabet(), m2.alphabet());
  const auto d1 = idx(m1.dim() * m1.dim());
  const auto d2 = idx(m2.dim() * m2.dim());
  const auto total = d1 + d2;

  std::vector<Matrix> actions;
  for (std::size_t a = 0; a < m1.alphabet().size(); ++a) {
    Matrix s = Matrix::Zero(total, total);
    s.topLeftCorner(d1, d1) = superoperator(m1.op(a));
    s.bottomRightCorner(d2, d2) = superoperator(m2.op(to_m2[a]));
    actions.push_back(std::move(s));
  }
  Vector eta(total);
  eta << acceptance_functional(m1.accept_projector()),
      -acceptance_functional(m2.accept_projector());
  Vector start(total);
  start << flatten(basis_projector(m1.dim(), m1.initial())),
      flatten(basis_projector(m2.dim(), m2.initial()));

  EquivalenceVerdict verdict;
  verdict.method = EquivMethod::algebraic;
  std::vector<Vector> basis;
  // Adds the component of v orthogonal to the span; false if v is in it.
  auto extend = [&](const Vector& v) {
    Vector r = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) r -= b * b.dot(r);
    }
    double norm = r.norm();
    if (norm <= kSpanTol) return false;
    basis.push_back(r / norm);
    return true;
  };

  std::deque<std::pair<Vector, std::vector<std::size_t>>> queue;
  auto check = [&](const Vector& v, const std::vector<std::size_t>& word) {
    double diff = std::abs(eta.cwiseProduct(v).sum());
    if (diff <= kTol) {
      verdict.max_residual = std::max(verdict.max_residual, diff);
      return true;
    }
    auto w = m1.alphabet().decode(word);
    verdict.equivalent = false;
    verdict.counterexample = w;
    verdict.prob_left = mo1g_accept_prob(m1, w);
    verdict.prob_right = mo1g_accept_prob(m2, w);
    return false;
  };

  extend(start);
  if (!check(start, {})) {
    verdict.checked = basis.size();
    return verdict;
  }
  queue.emplace_back(start, std::vector<std::size_t>{});
  while (!queue.empty()) {
    auto [v, word] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < actions.size(); ++a) {
      Vector next = actions[a] * v;
      if (!extend(next)) continue;
      auto next_word = word;
      next_word.push_back(a);
      if (!check(next, next_word)) {
        verdict.checked = basis.size();
        return verdict;
      }
      queue.emplace_back(std::move(next), std::move(next_word));
    }
  }
  verdict.checked = basis.size();
  return verdict;
}

EquivalenceVerdict equiv_any(const Machine& m1, const Machine& m2,
                             EquivMethod method,
                             std::optional<std::size_t> max_len) {
  const Mo1gQfa a = to_mo1g(m1);
  const Mo1gQfa b = to_mo1g(m2);
  if (method == EquivMethod::algebraic) return equiv_algebraic(a, b);
  return equiv_bounded(a, b, max_len);
}

EquivalenceVerdict equiv_bounded_direct(const Machine& m1, const Machine& m2,
                                        std::size_t max_len) {
  const LabelSet& alphabet = input_alphabet(m1);
  align_alphabets(alphabet, input_alphabet(m2));
  count_strings(alphabet.size(), max_len);

  Recorder rec;
  rec.verdict.method = EquivMethod::bounded;
  std::vector<std::size_t> word;
  for (std::size_t len = 0; len <= max_len && !rec.best; ++len) {
    word.assign(len, 0);
    while (true) {
      const Word w = alphabet.decode(word);
      const EvalOptions raw{.clamp = false};
      if (rec.observe(word, accept_prob(m1, w, raw), accept_prob(m2, w, raw))) {
        break;
      }
      // Odometer increment, last position fastest.
      std::size_t i = len;
      while (i > 0 && ++word[i - 1] == alphabet.size()) word[--i] = 0;
      if (i == 0) break;
    }
  }
  return std::move(rec).finish(alphabet);
}

}  // namespace qfa
