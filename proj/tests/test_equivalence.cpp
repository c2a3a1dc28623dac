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


#include "doctest.h"
#include "fixtures.hpp"
#include "qfa/equivalence.hpp"
#include "qfa/random.hpp"
#include "qfa/transforms.hpp"

using namespace qfa;
using namespace qfa::testing;

namespace {

// First word in length-then-lexicographic order whose acceptance differs.
std::optional<Word> first_difference(const Mo1gQfa& a, const Mo1gQfa& b, std::size_t max_len) {
  for (const auto& x : words_up_to(a.alphabet(), max_len)) {
    if (std::abs(mo1g_accept_prob(a, x) - mo1g_accept_prob(b, x)) > kTol) return x;
  }
  return std::nullopt;
}

Matrix permute(const Matrix& m, const std::vector<Eigen::Index>& p) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(p[i], p[j]) = m(i, j);
  return out;
}

// Same machine with quantum basis vector i renamed to p[i].
Qfac1 permute_quantum(const Qfac1& m, const std::vector<Eigen::Index>& p) {
  std::vector<std::string> labels(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) labels[p[i]] = m.quantum_states()[i];
  std::vector<Matrix> unitaries;
  for (const auto& u : m.unitaries()) unitaries.push_back(permute(u, p));
  std::vector<ProjectiveMeasurement> finals;
  for (const auto& f : m.final_measurements()) {
    finals.emplace_back(f.outcomes(), std::vector<Matrix>{permute(f.projector(0), p),
                                                          permute(f.projector(1), p)});
  }
  return Qfac1(LabelSet(labels), static_cast<std::size_t>(p[m.initial_quantum()]),
               m.classical(), std::move(unitaries), std::move(finals));
}

}  // namespace

TEST_CASE("length bounds") {
  CHECK(equiv_bound_mo1g(1, 1) == 1);
  CHECK(equiv_bound_mo1g(2, 2) == 7);
  CHECK(equiv_bound_mo1g(4, 6) == 51);
  CHECK(equiv_bound_hybrid(1, 1, 1, 1) == 1);
  CHECK(equiv_bound_hybrid(2, 2, 2, 2) == 31);
  CHECK(equiv_bound_hybrid(1, 3, 2, 2) == 24);
  CHECK_THROWS_AS(equiv_bound_mo1g(0, 1), Error);
  CHECK(equiv_bound(Machine(had_cl()), Machine(coin_qcfa())) == 16 + 36 - 1);
  CHECK(equiv_bound(Machine(dfa_even()), Machine(dfa_even())) == 7);
}

TEST_CASE("a machine is equivalent to itself") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = gen::mo1g(rng, gen::uniform(rng, 1, 3), 2, false);
    auto b = equiv_bounded(m, m);
    CHECK(b.equivalent);
    CHECK_FALSE(b.counterexample);
    CHECK(b.summary() == "equivalent");
    auto a = equiv_algebraic(m, m);
    CHECK(a.equivalent);
    CHECK(a.checked <= m.dim() * m.dim());
  }
}

TEST_CASE("DFA-EVEN against its complement") {
  auto even = dfa_to_mo1g(dfa_even());
  auto odd = dfa_to_mo1g(dfa_odd());
  for (auto verdict : {equiv_bounded(even, odd), equiv_algebraic(even, odd)}) {
    CHECK_FALSE(verdict.equivalent);
    REQUIRE(verdict.counterexample);
    CHECK(verdict.counterexample->size() <= 1);
    CHECK(std::abs(*verdict.prob_left - *verdict.prob_right) > kTol);
  }
  auto v = equiv_bounded(even, odd);
  CHECK(v.counterexample->empty());
  CHECK(v.summary() == "not equivalent: counterexample 'ε' (1.000000000000 vs 0.000000000000)");
}

TEST_CASE("HAD-CL direct semantics against its conversion") {
  const Machine direct = had_cl();
  const Machine converted = cl1qfa_to_mo1g(had_cl());
  // Full hybrid bound through the converted machine.
  auto full = equiv_any(direct, converted);
  CHECK(full.equivalent);
  CHECK(full.checked == equiv_bound(direct, converted) + 1);
  // History enumeration doubles per symbol, so the string-by-string check
  // through the direct evaluator stops at length 14.
  auto v = equiv_bounded_direct(direct, converted, 14);
  CHECK(v.equivalent);
  CHECK(v.checked == 15);
}

TEST_CASE("bounded and algebraic verdicts agree on random pairs") {
  gen::Rng rng(62);
  int differing = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Equivalent pairs are enumerated in full by the oracle, so keep them small.
    const bool same = trial % 4 == 0;
    auto a = gen::mo1g(rng, gen::uniform(rng, 1, same ? 2 : 3), 2, trial % 2 == 0);
    auto b = same ? ancilla_to_mo1g(mo1g_to_ancilla(a))
                            : gen::mo1g(rng, gen::uniform(rng, 1, 2), 2);
    auto bounded = equiv_bounded(a, b);
    auto algebraic = equiv_algebraic(a, b);
    CHECK(bounded.equivalent == algebraic.equivalent);
    CHECK(algebraic.checked <= a.dim() * a.dim() + b.dim() * b.dim());
    auto expected = first_difference(a, b, equiv_bound_mo1g(a.dim(), b.dim()));
    CHECK(bounded.counterexample == expected);
    if (!algebraic.equivalent) {
      ++differing;
      const Word& x = *algebraic.counterexample;
      CHECK(std::abs(mo1g_accept_prob(a, x) - mo1g_accept_prob(b, x)) > kTol);
    }
  }
  CHECK(differing > 0);
}

TEST_CASE("counterexamples are shortest then lexicographically least") {
  // Two DFAs over {a, b} that first differ on "ba" and "bb" (length 2).
  const LabelSet sigma{"a", "b"};
  // states: start, sawb, sink
  const Dfa left(LabelSet{"start", "sawb", "sink"}, sigma, 0, {0}, {2, 1, 2, 2, 2, 2});
  const Dfa right(LabelSet{"start", "sawb", "sink"}, sigma, 0, {0, 1}, {2, 1, 2, 2, 2, 2});
  // left accepts only ε; right also accepts "b"; they differ first at "b".
  auto v = equiv_bounded(dfa_to_mo1g(left), dfa_to_mo1g(right));
  REQUIRE(v.counterexample);
  CHECK(*v.counterexample == w("b"));

  const Dfa r2(LabelSet{"start", "sawb", "x", "sink"}, sigma, 0, {0, 2},
               {3, 1, 3, 2, 3, 3, 3, 3});
  const Dfa l2(LabelSet{"start", "sawb", "x", "sink"}, sigma, 0, {0},
               {3, 1, 3, 2, 3, 3, 3, 3});
  // The default bound for four states is too long to enumerate over {a, b}.
  auto v2 = equiv_bounded(dfa_to_mo1g(l2), dfa_to_mo1g(r2), 6);
  REQUIRE(v2.counterexample);
  CHECK(*v2.counterexample == w("bb"));
}

TEST_CASE("QFAC images are invariant under quantum state reordering") {
  gen::Rng rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = gen::qfac(rng, 3, gen::uniform(rng, 1, 2), 2);
    auto p = permute_quantum(m, {2, 0, 1});
    CHECK(violations(p).empty());
    auto a = qfac_to_mo1g(m);
    auto b = qfac_to_mo1g(p);
    CHECK(equiv_algebraic(a, b).equivalent);
  }
}

TEST_CASE("equivalence across models") {
  gen::Rng rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = gen::cl1qfa(rng, 2, 2, 2, 2);
    auto v = equiv_any(Machine(c), Machine(cl1qfa_to_qcfa(c)), EquivMethod::algebraic);
    CHECK(v.equivalent);
    CHECK(v.method == EquivMethod::algebraic);

    const Dfa d = gen::dfa(rng, gen::uniform(rng, 1, 3), gen::alphabet(2));
    CHECK(equiv_any(Machine(dfa_to_qfac_certainty(d)), Machine(dfa_to_qcfa_certainty(d)),
                    EquivMethod::algebraic)
              .equivalent);
    CHECK(equiv_any(Machine(d), Machine(dfa_to_qcfa_certainty(d)), EquivMethod::algebraic).equivalent);
  }
}

TEST_CASE("flipping a reachable final measurement breaks equivalence") {
  auto base = dfa_to_qfac_certainty(dfa_even());
  auto finals = base.final_measurements();
  // s2 is reached by "a"; swap its accept and reject projectors.
  finals[1] = ProjectiveMeasurement(finals[1].outcomes(),
                                    {finals[1].projector(1), finals[1].projector(0)});
  Qfac1 flipped(base.quantum_states(), base.initial_quantum(), base.classical(),
                base.unitaries(), finals);
  for (auto method : {EquivMethod::bounded, EquivMethod::algebraic}) {
    auto v = equiv_any(Machine(base), Machine(flipped), method);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.counterexample);
    CHECK(*v.counterexample == w("a"));
    CHECK(std::abs(qfac_accept_prob(base, *v.counterexample) -
                   qfac_accept_prob(flipped, *v.counterexample)) > kTol);
  }
}

TEST_CASE("errors and refusals") {
  auto even = dfa_to_mo1g(dfa_even());
  const Dfa other(LabelSet{"s"}, LabelSet{"b"}, 0, {0}, {0});
  CHECK_THROWS_AS(equiv_bounded(even, dfa_to_mo1g(other)), LabelError);
  CHECK_THROWS_AS(equiv_algebraic(even, dfa_to_mo1g(other)), LabelError);

  gen::Rng rng(65);
  auto big = gen::mo1g(rng, 3, 2);
  CHECK_THROWS_AS(equiv_bounded(big, big, 30), EnumerationLimitError);
  CHECK_NOTHROW(equiv_algebraic(big, big));

  Qsm q(LabelSet{"s"}, LabelSet{"a"}, LabelSet{"x"}, 0, {{Matrix::Identity(1, 1)}});
  CHECK_THROWS_AS(equiv_any(Machine(q), Machine(q)), TransformError);
}

TEST_CASE("discrepancies below tolerance are reported") {
  const double theta = 1e-5;
  Matrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  Mo1gQfa rotated(LabelSet{"0", "1"}, LabelSet{"a"}, 0, {QuantumOperation({r})},
                  basis_projector(2, 0));
  Mo1gQfa still(LabelSet{"0", "1"}, LabelSet{"a"}, 0, {QuantumOperation::identity(2)},
                basis_projector(2, 0));
  auto v = equiv_bounded(rotated, still, 2);
  CHECK(v.equivalent);
  CHECK(v.max_residual == doctest::Approx(std::pow(std::sin(2 * theta), 2)));
  CHECK(v.summary().rfind("equivalent (within tolerance, max residual 4e-10)", 0) == 0);
  CHECK_FALSE(equiv_bounded(rotated, still).equivalent);
}
