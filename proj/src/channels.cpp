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

#include "qfa/channels.hpp"

#include <algorithm>

namespace qfa {

namespace {

void require_square_family(const std::vector<Matrix>& elements,
                           const char* what) {
  if (elements.empty()) {
    throw DimensionError(std::string(what) + ": needs at least one element");
  }
  const auto n = elements[0].cols();
  if (n == 0) throw DimensionError(std::string(what) + ": zero dimension");
  for (const auto& e : elements) {
    if (e.rows() != n || e.cols() != n) {
      throw DimensionError(std::string(what) +
                           ": elements must share one square dimension");
    }
  }
}

double completeness(const std::vector<Matrix>& elements) {
  const auto n = elements[0].cols();
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& e : elements) sum.noalias() += e.adjoint() * e;
  sum -= Matrix::Identity(n, n);
  return sum.norm();
}

bool same_family(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), same_matrix);
}

QuantumOperation controlled(const LabelSet& outcomes,
                            const std::vector<Matrix>& ops,
                            const std::map<std::string, QuantumOperation>& branches) {
  for (const auto& [label, _] : branches) {
    if (!outcomes.contains(label)) {
      throw Error("controlled operation: branch '" + label +
                  "' matches no measurement outcome");
    }
  }
  std::optional<std::size_t> dim_b;
  std::vector<Matrix> elements;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto it = branches.find(outcomes[i]);
    if (it == branches.end()) {
      throw Error("controlled operation: missing branch for outcome '" +
                  outcomes[i] + "'");
    }
    const QuantumOperation& branch = it->second;
    if (dim_b && *dim_b != branch.dim()) {
      throw DimensionError("controlled operation: branches differ in dimension");
    }
    dim_b = branch.dim();
    for (const auto& e : branch.kraus()) {
      elements.push_back(tensor_product(ops[i], e));
    }
  }
  return QuantumOperation(std::move(elements));
}

}  // namespace

QuantumOperation::QuantumOperation(std::vector<Matrix> kraus)
    : kraus_(std::move(kraus)) {
  require_square_family(kraus_, "quantum operation");
}

QuantumOperation QuantumOperation::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return QuantumOperation({Matrix::Identity(n, n)});
}

QuantumOperation QuantumOperation::unitary(Matrix u) {
  return QuantumOperation({std::move(u)});
}

double QuantumOperation::completeness_residual() const {
  return completeness(kraus_);
}

Matrix QuantumOperation::apply(const Matrix& rho) const {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& e : kraus_) out.noalias() += e * rho * e.adjoint();
  return out;
}

bool operator==(const QuantumOperation& a, const QuantumOperation& b) {
  return same_family(a.kraus_, b.kraus_);
}

bool validate_operation(const QuantumOperation& op, double tol) {
  return op.completeness_residual() <= tol;
}

DensityOperator apply_operation(const QuantumOperation& op,
                                const DensityOperator& rho) {
  if (op.dim() != rho.dim()) {
    throw DimensionError("operation and state dimensions differ");
  }
  return DensityOperator::unchecked(op.apply(rho.matrix()));
}

QuantumOperation compose(const QuantumOperation& second,
                         const QuantumOperation& first) {
  if (second.dim() != first.dim()) {
    throw DimensionError("compose: operation dimensions differ");
  }
  std::vector<Matrix> products;
  for (const auto& b : second.kraus()) {
    for (const auto& a : first.kraus()) {
      Matrix p = b * a;
      if (!p.isZero(0.0)) products.push_back(std::move(p));
    }
  }
  if (products.empty()) {
    const auto n = static_cast<Eigen::Index>(first.dim());
    products.push_back(Matrix::Zero(n, n));
  }
  return QuantumOperation(std::move(products));
}

QuantumOperation tensor(const QuantumOperation& a, const QuantumOperation& b) {
  std::vector<Matrix> elements;
  elements.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& x : a.kraus()) {
    for (const auto& y : b.kraus()) elements.push_back(tensor_product(x, y));
  }
  return QuantumOperation(std::move(elements));
}

GeneralMeasurement::GeneralMeasurement(LabelSet outcomes,
                                       std::vector<Matrix> operators)
    : outcomes_(std::move(outcomes)), operators_(std::move(operators)) {
  if (outcomes_.size() != operators_.size()) {
    throw LabelError("measurement: outcome and operator counts differ");
  }
  require_square_family(operators_, "measurement");
}

double GeneralMeasurement::completeness_residual() const {
  return completeness(operators_);
}

bool operator==(const GeneralMeasurement& a, const GeneralMeasurement& b) {
  return a.outcomes_ == b.outcomes_ && same_family(a.operators_, b.operators_);
}

ProjectiveMeasurement::ProjectiveMeasurement(LabelSet outcomes,
                                             std::vector<Matrix> projectors)
    : general_(std::move(outcomes), std::move(projectors)) {}

std::vector<Violation> ProjectiveMeasurement::violations(
    const std::string& name, double tol) const {
  std::vector<Violation> out;
  const auto& ps = projectors();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    double r = projector_residual(ps[i]);
    if (r > tol) {
      out.push_back({name + "[" + outcomes()[i] + "]", "not a projector", r});
    }
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      double r = (ps[i] * ps[j]).norm();
      if (r > tol) {
        out.push_back({name + "[" + outcomes()[i] + "," + outcomes()[j] + "]",
                       "projectors not orthogonal", r});
      }
    }
  }
  const auto n = ps[0].rows();
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& p : ps) sum += p;
  double r = (sum - Matrix::Identity(n, n)).norm();
  if (r > tol) out.push_back({name, "projectors do not sum to identity", r});
  return out;
}

std::vector<MeasurementOutcome> measure(const GeneralMeasurement& m,
                                        const DensityOperator& rho) {
  if (m.dim() != rho.dim()) {
    throw DimensionError("measurement and state dimensions differ");
  }
  std::vector<MeasurementOutcome> out;
  for (std::size_t i = 0; i < m.outcomes().size(); ++i) {
    Matrix branch = m.op(i) * rho.matrix() * m.op(i).adjoint();
    double p = branch.trace().real();
    if (p <= kTol) continue;
    out.push_back(
        {m.outcomes()[i], p, DensityOperator::unchecked(branch / p)});
  }
  return out;
}

std::vector<MeasurementOutcome> measure(const ProjectiveMeasurement& m,
                                        const DensityOperator& rho) {
  return measure(m.as_general(), rho);
}

QuantumOperation controlled_operation(
    const ProjectiveMeasurement& measurement,
    const std::map<std::string, QuantumOperation>& branches) {
  return controlled(measurement.outcomes(), measurement.projectors(),
                    branches);
}

QuantumOperation controlled_operation_general(
    const GeneralMeasurement& measurement,
    const std::map<std::string, QuantumOperation>& branches) {
  return controlled(measurement.outcomes(), measurement.operators(), branches);
}

}  // namespace qfa
