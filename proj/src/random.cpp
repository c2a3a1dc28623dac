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

#include "qfa/random.hpp"

#include <Eigen/QR>
#include <string>

namespace qfa::gen {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Matrix gaussian(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> normal;
  Matrix g(idx(rows), idx(cols));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      double re = normal(rng);
      g(i, j) = Complex(re, normal(rng));
    }
  }
  return g;
}

Matrix unitary(Rng& rng, std::size_t n) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(rng, n, n));
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  // Fix the column phases so the distribution is Haar.
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix isometry(Rng& rng, std::size_t rows, std::size_t cols) {
  return unitary(rng, rows).leftCols(idx(cols));
}

Matrix density(Rng& rng, std::size_t n) {
  Matrix g = gaussian(rng, n, n);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix hermitian(Rng& rng, std::size_t n) {
  Matrix g = gaussian(rng, n, n);
  return (g + g.adjoint()) / 2.0;
}

std::vector<Matrix> kraus_blocks(Rng& rng, std::size_t dim, std::size_t count) {
  Matrix v = isometry(rng, dim * count, dim);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(v.middleRows(idx(k * dim), idx(dim)));
  }
  return out;
}

QuantumOperation operation(Rng& rng, std::size_t dim, std::size_t kraus_count) {
  return QuantumOperation(kraus_blocks(rng, dim, kraus_count));
}

GeneralMeasurement general_measurement(Rng& rng, const LabelSet& outcomes,
                                       std::size_t dim) {
  return GeneralMeasurement(outcomes, kraus_blocks(rng, dim, outcomes.size()));
}

ProjectiveMeasurement projective_measurement(Rng& rng, const LabelSet& outcomes,
                                             std::size_t dim, bool diagonal) {
  std::vector<Matrix> projectors(outcomes.size(),
                                 Matrix::Zero(idx(dim), idx(dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    projectors[uniform(rng, 0, outcomes.size() - 1)] += basis_projector(dim, i);
  }
  if (!diagonal) {
    Matrix u = unitary(rng, dim);
    for (auto& p : projectors) p = u * p * u.adjoint();
  }
  return ProjectiveMeasurement(outcomes, std::move(projectors));
}

std::vector<std::size_t> subset(Rng& rng, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (uniform(rng, 0, 1) == 1) out.push_back(i);
  }
  return out;
}

LabelSet labels(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return LabelSet(std::move(out));
}

LabelSet alphabet(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return LabelSet(std::move(out));
}

Dfa dfa(Rng& rng, std::size_t states, const LabelSet& alphabet) {
  std::vector<std::size_t> next(states * alphabet.size());
  for (auto& t : next) t = uniform(rng, 0, states - 1);
  auto accepting = subset(rng, states);
  return Dfa(labels("s", states), alphabet, uniform(rng, 0, states - 1),
             std::move(accepting), std::move(next));
}

Word word(Rng& rng, const LabelSet& alphabet, std::size_t length) {
  Word out;
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
  }
  return out;
}

Mo1gQfa mo1g(Rng& rng, std::size_t dim, std::size_t symbols,
             bool diagonal_accept) {
  std::vector<QuantumOperation> ops;
  for (std::size_t a = 0; a < symbols; ++a) {
    ops.push_back(operation(rng, dim, uniform(rng, 1, 3)));
  }
  Matrix accept = projector_from_subset(dim, subset(rng, dim));
  if (!diagonal_accept) {
    Matrix u = unitary(rng, dim);
    accept = u * accept * u.adjoint();
  }
  return Mo1gQfa(labels("q", dim), alphabet(symbols), uniform(rng, 0, dim - 1),
                 std::move(ops), std::move(accept));
}

Cl1Qfa cl1qfa(Rng& rng, std::size_t quantum, std::size_t control,
              std::size_t outcomes, std::size_t symbols) {
  std::vector<Matrix> unitaries;
  for (std::size_t a = 0; a < symbols; ++a) unitaries.push_back(unitary(rng, quantum));
  const LabelSet outs = labels("c", outcomes);
  auto measurement = projective_measurement(rng, outs, quantum, uniform(rng, 0, 1) == 1);
  return Cl1Qfa(labels("q", quantum), alphabet(symbols),
                uniform(rng, 0, quantum - 1), std::move(unitaries),
                std::move(measurement), dfa(rng, control, outs));
}

Qfac1 qfac(Rng& rng, std::size_t quantum, std::size_t classical,
           std::size_t symbols) {
  Dfa base = dfa(rng, classical, alphabet(symbols)).without_accepting();
  std::vector<Matrix> unitaries;
  for (std::size_t i = 0; i < classical * symbols; ++i) {
    unitaries.push_back(unitary(rng, quantum));
  }
  const LabelSet ar{std::string(Qfac1::kAccept), std::string(Qfac1::kReject)};
  std::vector<ProjectiveMeasurement> finals;
  for (std::size_t s = 0; s < classical; ++s) {
    finals.push_back(projective_measurement(rng, ar, quantum, uniform(rng, 0, 1) == 1));
  }
  return Qfac1(labels("q", quantum), uniform(rng, 0, quantum - 1),
               std::move(base), std::move(unitaries), std::move(finals));
}

Qcfa1 qcfa(Rng& rng, std::size_t quantum, std::size_t classical,
           std::size_t outcomes, std::size_t symbols) {
  const LabelSet outs = labels("c", outcomes);
  std::vector<GeneralMeasurement> measurements;
  for (std::size_t i = 0; i < classical * symbols; ++i) {
    measurements.push_back(general_measurement(rng, outs, quantum));
  }
  std::vector<std::size_t> next(classical * symbols * outcomes);
  for (auto& t : next) t = uniform(rng, 0, classical - 1);
  return Qcfa1(labels("q", quantum), labels("s", classical), alphabet(symbols),
               outs, uniform(rng, 0, quantum - 1),
               uniform(rng, 0, classical - 1), std::move(measurements),
               std::move(next), subset(rng, classical));
}

namespace {

std::vector<std::vector<Matrix>> isometric_transitions(Rng& rng, std::size_t dim,
                                                       std::size_t outputs,
                                                       std::size_t symbols) {
  std::vector<std::vector<Matrix>> out;
  for (std::size_t a = 0; a < symbols; ++a) {
    out.push_back(kraus_blocks(rng, dim, outputs));
  }
  return out;
}

}  // namespace

AncillaQfa ancilla(Rng& rng, std::size_t dim, std::size_t outputs,
                   std::size_t symbols) {
  auto transitions = isometric_transitions(rng, dim, outputs, symbols);
  return AncillaQfa(labels("q", dim), alphabet(symbols), labels("w", outputs),
                    uniform(rng, 0, dim - 1), std::move(transitions),
                    subset(rng, dim));
}

Qsm qsm(Rng& rng, std::size_t dim, std::size_t outputs, std::size_t symbols) {
  auto transitions = isometric_transitions(rng, dim, outputs, symbols);
  return Qsm(labels("q", dim), alphabet(symbols), labels("w", outputs),
             uniform(rng, 0, dim - 1), std::move(transitions));
}

Machine machine(Rng& rng, std::string_view kind) {
  auto small = [&] { return uniform(rng, 1, 3); };
  auto pair = [&] { return uniform(rng, 1, 2); };
  if (kind == "dfa") return dfa(rng, small(), alphabet(pair()));
  if (kind == "mo1g") {
    std::size_t d = small();
    std::size_t s = pair();
    return mo1g(rng, d, s, uniform(rng, 0, 1) == 1);
  }
  if (kind == "cl1qfa") {
    std::size_t q = small(), s = small(), c = pair();
    return cl1qfa(rng, q, s, c, pair());
  }
  if (kind == "qfac") {
    std::size_t q = small(), s = small();
    return qfac(rng, q, s, pair());
  }
  if (kind == "qcfa") {
    std::size_t q = small(), s = small(), c = pair();
    return qcfa(rng, q, s, c, pair());
  }
  if (kind == "ancilla") {
    std::size_t q = small(), w = pair();
    return ancilla(rng, q, w, pair());
  }
  if (kind == "qsm") {
    std::size_t q = small(), w = pair();
    return qsm(rng, q, w, pair());
  }
  throw Error("unknown machine kind '" + std::string(kind) + "'");
}

}  // namespace qfa::gen
