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

#include "qfa/transforms.hpp"

#include <algorithm>

namespace qfa {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

Matrix identity(std::size_t n) { return Matrix::Identity(idx(n), idx(n)); }

}  // namespace

LabelSet product_labels(const LabelSet& first, const LabelSet& second) {
  std::vector<std::string> out;
  out.reserve(first.size() * second.size());
  for (const auto& a : first.labels()) {
    for (const auto& b : second.labels()) out.push_back("(" + a + "," + b + ")");
  }
  return LabelSet(std::move(out));
}

QuantumOperation dfa_symbol_operation(const Dfa& a, std::size_t symbol) {
  std::vector<Matrix> elements;
  elements.reserve(a.num_states());
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    elements.push_back(matrix_unit(a.num_states(), a.next(s, symbol), s));
  }
  return QuantumOperation(std::move(elements));
}

Mo1gQfa dfa_to_mo1g(const Dfa& a) {
  std::vector<QuantumOperation> ops;
  for (std::size_t sym = 0; sym < a.num_symbols(); ++sym) {
    ops.push_back(dfa_symbol_operation(a, sym));
  }
  const auto accepting = a.accepting();
  return Mo1gQfa::with_accepting(a.states(), a.alphabet(), a.initial(),
                                 std::move(ops), accepting);
}

Mo1gQfa cl1qfa_to_mo1g(const Cl1Qfa& m) {
  require_valid(m);
  const Dfa& control = m.control();
  const std::size_t nq = m.dim();
  const std::size_t ns = control.num_states();
  std::vector<QuantumOperation> ops;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    std::vector<Matrix> elements;
    elements.reserve(m.outcomes().size() * ns);
    for (std::size_t c = 0; c < m.outcomes().size(); ++c) {
      const Matrix pu = m.measurement().projector(c) * m.unitary(a);
      for (std::size_t s = 0; s < ns; ++s) {
        elements.push_back(
            tensor_product(pu, matrix_unit(ns, control.next(s, c), s)));
      }
    }
    ops.emplace_back(std::move(elements));
  }
  const auto accepting = control.accepting();
  Matrix projector =
      tensor_product(identity(nq), projector_from_subset(ns, accepting));
  return Mo1gQfa(product_labels(m.states(), control.states()), m.alphabet(),
                 m.initial() * ns + control.initial(), std::move(ops),
                 std::move(projector));
}

Mo1gQfa qfac_to_mo1g(const Qfac1& m) {
  require_valid(m);
  const Dfa& classical = m.classical();
  const std::size_t nq = m.dim();
  const std::size_t ns = classical.num_states();
  std::vector<QuantumOperation> ops;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    std::vector<Matrix> controlled;
    controlled.reserve(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      controlled.push_back(
          tensor_product(basis_projector(ns, s), m.unitary(s, a)));
    }
    QuantumOperation classical_step = tensor(
        dfa_symbol_operation(classical, a), QuantumOperation::identity(nq));
    ops.push_back(compose(classical_step, QuantumOperation(std::move(controlled))));
  }
  Matrix projector = Matrix::Zero(idx(ns * nq), idx(ns * nq));
  for (std::size_t s = 0; s < ns; ++s) {
    projector += tensor_product(basis_projector(ns, s), m.accept_projector(s));
  }
  return Mo1gQfa(product_labels(classical.states(), m.quantum_states()),
                 m.alphabet(), m.initial_classical() * nq + m.initial_quantum(),
                 std::move(ops), std::move(projector));
}

Mo1gQfa qcfa_to_mo1g(const Qcfa1& m, const QcfaConversionOptions& opts) {
  require_valid(m);
  const std::size_t nq = m.dim();
  const std::size_t ns = m.classical_states().size();
  std::vector<QuantumOperation> ops;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    std::vector<Matrix> elements;
    for (std::size_t s = 0; s < ns; ++s) {
      const Matrix detect = basis_projector(ns, s);
      for (std::size_t c = 0; c < m.outcomes().size(); ++c) {
        const Matrix& mc = m.measurement(s, a).op(c);
        if (opts.full_element_set) {
          for (std::size_t k = 0; k < ns; ++k) {
            Matrix f = matrix_unit(ns, m.next(k, a, c), k);
            elements.push_back(tensor_product(mc, f * detect));
          }
        } else {
          elements.push_back(
              tensor_product(mc, matrix_unit(ns, m.next(s, a, c), s)));
        }
      }
    }
    ops.emplace_back(std::move(elements));
  }
  const auto accepting = m.accepting();
  Matrix projector =
      tensor_product(identity(nq), projector_from_subset(ns, accepting));
  return Mo1gQfa(product_labels(m.quantum_states(), m.classical_states()),
                 m.alphabet(), m.initial_quantum() * ns + m.initial_classical(),
                 std::move(ops), std::move(projector));
}

Mo1gQfa ancilla_to_mo1g(const AncillaQfa& m) {
  require_valid(m);
  std::vector<QuantumOperation> ops;
  for (const auto& row : m.transitions()) ops.emplace_back(row);
  return Mo1gQfa::with_accepting(m.states(), m.alphabet(), m.initial(),
                                 std::move(ops), m.accepting());
}

AncillaQfa mo1g_to_ancilla(const Mo1gQfa& m) {
  require_valid(m);
  auto accepting = subset_of_projector(m.accept_projector());
  if (!accepting) {
    throw TransformError(
        "accept projector is not a state-subset projector; an ancilla QFA "
        "needs an accepting state set");
  }
  std::size_t k = 0;
  for (const auto& op : m.ops()) k = std::max(k, op.kraus().size());
  std::vector<std::string> outputs;
  for (std::size_t w = 1; w <= k; ++w) outputs.push_back(std::to_string(w));
  std::vector<std::vector<Matrix>> transitions;
  for (const auto& op : m.ops()) {
    std::vector<Matrix> row = op.kraus();
    row.resize(k, Matrix::Zero(idx(m.dim()), idx(m.dim())));
    transitions.push_back(std::move(row));
  }
  return AncillaQfa(m.states(), m.alphabet(), LabelSet(std::move(outputs)),
                    m.initial(), std::move(transitions), std::move(*accepting));
}

AncillaQfa qsm_to_ancilla(const Qsm& m, std::span<const std::string> accepting) {
  require_valid(m);
  std::vector<std::size_t> acc;
  for (const auto& s : accepting) acc.push_back(m.states().index_of(s, "state"));
  return AncillaQfa(m.states(), m.alphabet(), m.outputs(), m.initial(),
                    m.transitions(), std::move(acc));
}

Qcfa1 cl1qfa_to_qcfa(const Cl1Qfa& m) {
  require_valid(m);
  const Dfa& control = m.control();
  const std::size_t ns = control.num_states();
  const std::size_t nc = m.outcomes().size();
  std::vector<GeneralMeasurement> per_symbol;
  for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
    std::vector<Matrix> ops;
    for (std::size_t c = 0; c < nc; ++c) {
      ops.push_back(m.measurement().projector(c) * m.unitary(a));
    }
    per_symbol.emplace_back(m.outcomes(), std::move(ops));
  }
  std::vector<GeneralMeasurement> measurements;
  std::vector<std::size_t> next;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
      measurements.push_back(per_symbol[a]);
      for (std::size_t c = 0; c < nc; ++c) next.push_back(control.next(s, c));
    }
  }
  return Qcfa1(m.states(), control.states(), m.alphabet(), m.outcomes(),
               m.initial(), control.initial(), std::move(measurements),
               std::move(next), control.accepting());
}

Qfac1 dfa_to_qfac_certainty(const Dfa& a) {
  const Matrix zero = basis_projector(2, 0);
  const Matrix one = basis_projector(2, 1);
  const LabelSet ar{std::string(Qfac1::kAccept), std::string(Qfac1::kReject)};
  std::vector<ProjectiveMeasurement> finals;
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (a.is_accepting(s)) {
      finals.emplace_back(ar, std::vector<Matrix>{one, zero});
    } else {
      finals.emplace_back(ar, std::vector<Matrix>{zero, one});
    }
  }
  std::vector<Matrix> unitaries(a.num_states() * a.num_symbols(), identity(2));
  return Qfac1(LabelSet{"0", "1"}, 1, a.without_accepting(),
               std::move(unitaries), std::move(finals));
}

Qcfa1 dfa_to_qcfa_certainty(const Dfa& a) {
  const LabelSet outcomes{"c"};
  std::vector<GeneralMeasurement> measurements(
      a.num_states() * a.num_symbols(),
      GeneralMeasurement(outcomes, {identity(1)}));
  std::vector<std::size_t> next;
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    for (std::size_t sym = 0; sym < a.num_symbols(); ++sym) {
      next.push_back(a.next(s, sym));
    }
  }
  return Qcfa1(LabelSet{"q"}, a.states(), a.alphabet(), outcomes, 0,
               a.initial(), std::move(measurements), std::move(next),
               a.accepting());
}

Mo1gQfa to_mo1g(const Machine& m) {
  struct Convert {
    Mo1gQfa operator()(const Dfa& x) const { return dfa_to_mo1g(x); }
    Mo1gQfa operator()(const Mo1gQfa& x) const { return x; }
    Mo1gQfa operator()(const Cl1Qfa& x) const { return cl1qfa_to_mo1g(x); }
    Mo1gQfa operator()(const Qfac1& x) const { return qfac_to_mo1g(x); }
    Mo1gQfa operator()(const Qcfa1& x) const { return qcfa_to_mo1g(x); }
    Mo1gQfa operator()(const AncillaQfa& x) const { return ancilla_to_mo1g(x); }
    Mo1gQfa operator()(const Qsm&) const {
      throw TransformError("a QSM has no accepting states; convert it with "
                           "qsm_to_ancilla first");
    }
  };
  return std::visit(Convert{}, m);
}

}  // namespace qfa
