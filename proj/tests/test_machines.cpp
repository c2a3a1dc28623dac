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
#include "qfa/random.hpp"
#include "qfa/transforms.hpp"

using namespace qfa;
using namespace qfa::testing;

namespace {

// Sum over every outcome word y in C^n, no pruning.
double cl1qfa_oracle(const Cl1Qfa& m, const Word& x) {
  const auto xs = m.alphabet().encode(x);
  double total = 0;
  for (const auto& y : words_of_length(m.outcomes(), xs.size())) {
    Vector psi = basis_vector(m.dim(), m.initial());
    std::size_t s = m.control().initial();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::size_t c = *m.outcomes().find(y[i]);
      psi = m.measurement().projector(c) * m.unitary(xs[i]) * psi;
      s = m.control().next(s, c);
    }
    if (m.control().is_accepting(s)) total += psi.squaredNorm();
  }
  return total;
}

double qcfa_oracle(const Qcfa1& m, const Word& x) {
  const auto xs = m.alphabet().encode(x);
  double total = 0;
  for (const auto& y : words_of_length(m.outcomes(), xs.size())) {
    Vector psi = basis_vector(m.dim(), m.initial_quantum());
    std::size_t s = m.initial_classical();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::size_t c = *m.outcomes().find(y[i]);
      psi = m.measurement(s, xs[i]).op(c) * psi;
      s = m.next(s, xs[i], c);
    }
    if (m.is_accepting(s)) total += psi.squaredNorm();
  }
  return total;
}

// rho' = Tr_Omega(V_sigma rho V_sigma^dagger) with the stacked isometry.
double ancilla_oracle(const AncillaQfa& m, const Word& x) {
  const auto n = m.dim();
  const auto k = m.outputs().size();
  Matrix rho = basis_projector(n, m.initial());
  for (auto a : m.alphabet().encode(x)) {
    Matrix v = Matrix::Zero(Eigen::Index(n * k), Eigen::Index(n));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t w = 0; w < k; ++w) v(Eigen::Index(p * k + w), Eigen::Index(q)) = m.amplitude(q, a, p, w);
    rho = partial_trace_second(v * rho * v.adjoint(), n, k);
  }
  double total = 0;
  for (auto q : m.accepting()) total += rho(Eigen::Index(q), Eigen::Index(q)).real();
  return total;
}

}  // namespace

TEST_CASE("MO-1gQFA acceptance") {
  Mo1gQfa ident(LabelSet{"q0", "q1"}, LabelSet{"a", "b"}, 1,
                {QuantumOperation::identity(2), QuantumOperation::identity(2)},
                basis_projector(2, 1));
  CHECK(mo1g_accept_prob(ident, w("")) == 1.0);
  CHECK(mo1g_accept_prob(ident, w("abba")) == 1.0);

  auto image = dfa_to_mo1g(dfa_even());
  CHECK(mo1g_accept_prob(image, w("aa")) == 1.0);
  CHECK(mo1g_accept_prob(image, w("a")) == 0.0);

  Mo1gQfa had(LabelSet{"0", "1"}, LabelSet{"a"}, 0, {QuantumOperation({hadamard()})},
              basis_projector(2, 0));
  CHECK(mo1g_accept_prob(had, w("a")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(mo1g_accept_prob(had, w("b")), LabelError);
}

TEST_CASE("CL-1QFA acceptance") {
  const Cl1Qfa m = had_cl();
  CHECK(cl1qfa_accept_prob(m, w("a")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cl1qfa_accept_prob(m, w("aa")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cl1qfa_accept_prob(m, w("")) == 0.0);

  const Dfa all(LabelSet{"t"}, LabelSet{"0", "1"}, 0, {0}, {0, 0});
  const Cl1Qfa total = had_cl(all);
  for (const auto& x : words_up_to(LabelSet{"a"}, 8)) {
    CHECK(std::abs(cl1qfa_accept_prob(total, x) - 1.0) < 1e-12);
  }
}

TEST_CASE("CL-1QFA matches exhaustive outcome enumeration") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = gen::cl1qfa(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3),
                         gen::uniform(rng, 1, 2), gen::uniform(rng, 1, 2));
    REQUIRE(violations(m).empty());
    for (const auto& x : words_up_to(m.alphabet(), 4)) {
      CHECK(std::abs(cl1qfa_accept_prob(m, x) - cl1qfa_oracle(m, x)) < 1e-12);
    }
  }
}

TEST_CASE("1QFAC acceptance") {
  auto image = dfa_to_qfac_certainty(dfa_even());
  CHECK(qfac_accept_prob(image, w("aa")) == 1.0);
  CHECK(qfac_accept_prob(image, w("a")) == 0.0);

  const LabelSet ar{"a", "r"};
  const Matrix id = Matrix::Identity(2, 2);
  ProjectiveMeasurement keep(ar, {basis_projector(2, 0), basis_projector(2, 1)});
  Qfac1 trivial(LabelSet{"0", "1"}, 0, dfa_even().without_accepting(), {id, id}, {keep, keep});
  CHECK(qfac_accept_prob(trivial, w("")) == 1.0);

  Qfac1 coin(LabelSet{"0", "1"}, 0, Dfa(LabelSet{"s"}, LabelSet{"a"}, 0, {}, {0}),
             {hadamard()}, {keep});
  CHECK(qfac_accept_prob(coin, w("a")) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(Qfac1(LabelSet{"0", "1"}, 0, dfa_even(), {id, id}, {keep, keep}), Error);
}

TEST_CASE("1QFAC matches the product formula") {
  gen::Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = gen::qfac(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 2));
    for (const auto& x : words_up_to(m.alphabet(), 4)) {
      Vector psi = basis_vector(m.dim(), m.initial_quantum());
      std::size_t s = m.initial_classical();
      for (auto a : m.alphabet().encode(x)) {
        psi = m.unitary(s, a) * psi;
        s = m.classical().next(s, a);
      }
      double expected = (m.accept_projector(s) * psi).squaredNorm();
      CHECK(std::abs(qfac_accept_prob(m, x) - expected) < 1e-12);
    }
  }
}

TEST_CASE("1QCFA acceptance") {
  const Qcfa1 coin = coin_qcfa();
  CHECK(qcfa_accept_prob(coin, w("a")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qcfa_accept_prob(coin, w("aaa")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qcfa_accept_prob(coin, w("")) == 0.0);
  CHECK(qcfa_accept_prob(coin.complemented(), w("")) == 1.0);

  // Single-outcome unitary measurements over a DFA-EVEN-shaped classical part.
  gen::Rng rng(43);
  const LabelSet one{"c"};
  std::vector<GeneralMeasurement> ms{GeneralMeasurement(one, {gen::unitary(rng, 2)}),
                                     GeneralMeasurement(one, {gen::unitary(rng, 2)})};
  Qcfa1 classical(LabelSet{"q0", "q1"}, LabelSet{"s1", "s2"}, LabelSet{"a"}, one, 0, 0, ms,
                  {1, 0}, {0});
  for (const auto& x : words_up_to(LabelSet{"a"}, 8)) {
    double p = qcfa_accept_prob(classical, x);
    CHECK(std::abs(p - (dfa_accepts(dfa_even(), x) ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("1QCFA matches exhaustive enumeration and complements sum to one") {
  gen::Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = gen::qcfa(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3),
                       gen::uniform(rng, 1, 2), gen::uniform(rng, 1, 2));
    auto c = m.complemented();
    for (const auto& x : words_up_to(m.alphabet(), 4)) {
      double p = qcfa_accept_prob(m, x);
      CHECK(std::abs(p - qcfa_oracle(m, x)) < 1e-12);
      CHECK(std::abs(p + qcfa_accept_prob(c, x) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("pruning does not change fixture results") {
  const EvalOptions exact{.prune_eps = 0.0, .clamp = false};
  for (const auto& x : words_up_to(LabelSet{"a"}, 8)) {
    CHECK(std::abs(cl1qfa_accept_prob(had_cl(), x) - cl1qfa_accept_prob(had_cl(), x, exact)) < kTol);
    CHECK(std::abs(qcfa_accept_prob(coin_qcfa(), x) - qcfa_accept_prob(coin_qcfa(), x, exact)) < kTol);
  }
}

TEST_CASE("ancilla QFA acceptance") {
  // |Omega| = 1 with a permutation.
  Matrix swap = Matrix::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  AncillaQfa perm(LabelSet{"q0", "q1"}, LabelSet{"a"}, LabelSet{"w"}, 0, {{swap}}, {0});
  CHECK(ancilla_accept_prob(perm, w("")) == 1.0);
  CHECK(ancilla_accept_prob(perm, w("a")) == 0.0);
  CHECK(ancilla_accept_prob(perm, w("aa")) == 1.0);

  gen::Rng rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = gen::ancilla(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 2));
    REQUIRE(violations(m).empty());
    for (const auto& x : words_up_to(m.alphabet(), 4)) {
      CHECK(std::abs(ancilla_accept_prob(m, x) - ancilla_oracle(m, x)) < 1e-12);
    }
  }
}

TEST_CASE("QSM output probabilities") {
  // Deterministic printer: every symbol prints "x" and stays.
  Qsm printer(LabelSet{"s"}, LabelSet{"a"}, LabelSet{"x", "y"}, 0,
              {{Matrix::Identity(1, 1), Matrix::Zero(1, 1)}});
  CHECK(qsm_output_prob(printer, w("aa"), w("xx")) == 1.0);
  CHECK(qsm_output_prob(printer, w("aa"), w("xy")) == 0.0);
  CHECK(qsm_output_prob(printer, w(""), w("")) == 1.0);
  CHECK_THROWS_AS(qsm_output_prob(printer, w("a"), w("")), Error);
  CHECK_THROWS_AS(qsm_output_prob(printer, w("a"), w("z")), LabelError);
  CHECK_THROWS_AS(accept_prob(Machine(printer), w("a")), Error);

  gen::Rng rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = gen::qsm(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 2), gen::uniform(rng, 1, 2));
    REQUIRE(violations(m).empty());
    const Word x = gen::word(rng, m.alphabet(), gen::uniform(rng, 0, 4));
    double total = 0;
    for (const auto& y : words_of_length(m.outputs(), x.size())) total += qsm_output_prob(m, x, y);
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("validation names the failing component") {
  CHECK(violations(had_cl()).empty());
  CHECK(violations(coin_qcfa()).empty());
  CHECK(validate_machine(Machine(dfa_even())).empty());

  Cl1Qfa scaled(LabelSet{"q0", "q1"}, LabelSet{"a"}, 0, {hadamard() * 1.01},
                computational_basis(), ends_in_zero());
  auto v = violations(scaled);
  REQUIRE(v.size() == 1);
  CHECK(v[0].component == "U_a");
  // ||1.01^2 I - I||_F by hand.
  CHECK(v[0].residual == doctest::Approx((1.01 * 1.01 - 1.0) * std::sqrt(2.0)));
  CHECK_THROWS_AS(require_valid(scaled), ValidationError);

  Matrix half = Matrix::Identity(2, 2) * 0.5;
  AncillaQfa bad(LabelSet{"q0", "q1"}, LabelSet{"a", "b"}, LabelSet{"w"}, 0,
                 {{Matrix::Identity(2, 2)}, {half}}, {});
  auto va = violations(bad);
  REQUIRE(va.size() == 1);
  CHECK(va[0].component == "V_b");
  CHECK(va[0].to_string().find("V_b not an isometry") == 0);
}

TEST_CASE("raw probabilities stay in range for random machines") {
  gen::Rng rng(47);
  const EvalOptions raw{.clamp = false};
  for (const char* kind : {"mo1g", "cl1qfa", "qfac", "qcfa", "ancilla"}) {
    for (int trial = 0; trial < 20; ++trial) {
      Machine m = gen::machine(rng, kind);
      REQUIRE(validate_machine(m).empty());
      for (const auto& x : words_up_to(input_alphabet(m), 4)) {
        double p = accept_prob(m, x, raw);
        CHECK(p >= -kTol);
        CHECK(p <= 1 + kTol);
      }
    }
  }
}

TEST_CASE("construction rejects inconsistent shapes") {
  CHECK_THROWS(Cl1Qfa(LabelSet{"q0", "q1"}, LabelSet{"a"}, 0, {Matrix::Identity(3, 3)},
                      computational_basis(), ends_in_zero()));
  CHECK_THROWS(Cl1Qfa(LabelSet{"q0", "q1"}, LabelSet{"a"}, 5, {hadamard()},
                      computational_basis(), ends_in_zero()));
  CHECK_THROWS(Cl1Qfa(LabelSet{"q0", "q1"}, LabelSet{"a"}, 0, {hadamard()},
                      computational_basis(), dfa_even()));
  CHECK(kind_name(Machine(coin_qcfa())) == "qcfa");
}
