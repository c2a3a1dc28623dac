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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfa/error.hpp"
#include "qfa/labels.hpp"
#include "qfa/linalg.hpp"

namespace qfa {

/// Quantum operation in operator-sum form, rho -> sum_k E_k rho E_k^dagger.
///
/// Construction checks shapes only. Whether the Kraus family is complete
/// (sum_k E_k^dagger E_k = I) is a separate question answered by
/// validate_operation, so that invalid operations can still be represented
/// and reported on.
class QuantumOperation {
 public:
  /// Throws DimensionError on an empty list or non-square/mismatched elements.
  explicit QuantumOperation(std::vector<Matrix> kraus);

  static QuantumOperation identity(std::size_t dim);
  static QuantumOperation unitary(Matrix u);

  std::size_t dim() const { return static_cast<std::size_t>(kraus_[0].rows()); }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// ||sum_k E_k^dagger E_k - I||_F.
  double completeness_residual() const;

  /// sum_k E_k rho E_k^dagger on a raw operator.
  Matrix apply(const Matrix& rho) const;

  friend bool operator==(const QuantumOperation& a, const QuantumOperation& b);

 private:
  std::vector<Matrix> kraus_;
};

bool validate_operation(const QuantumOperation& op, double tol = kTol);

/// Throws DimensionError when dimensions differ.
DensityOperator apply_operation(const QuantumOperation& op,
                                const DensityOperator& rho);

/// second o first: the operation applying `first`, then `second`. Elements
/// are all pairwise products; products that vanish exactly are dropped
/// unless every product vanishes.
QuantumOperation compose(const QuantumOperation& second,
                         const QuantumOperation& first);

/// a (x) b, elements {A_i (x) B_j}.
QuantumOperation tensor(const QuantumOperation& a, const QuantumOperation& b);

/// Measurement {M_m} with labelled outcomes, p(m) = Tr(M_m^dagger M_m rho).
class GeneralMeasurement {
 public:
  /// Throws LabelError / DimensionError on malformed input.
  GeneralMeasurement(LabelSet outcomes, std::vector<Matrix> operators);

  std::size_t dim() const {
    return static_cast<std::size_t>(operators_[0].cols());
  }
  const LabelSet& outcomes() const { return outcomes_; }
  const std::vector<Matrix>& operators() const { return operators_; }
  const Matrix& op(std::size_t outcome) const { return operators_.at(outcome); }

  /// ||sum_m M_m^dagger M_m - I||_F.
  double completeness_residual() const;
  bool is_complete(double tol = kTol) const {
    return completeness_residual() <= tol;
  }

  /// The induced trace-preserving operation rho -> sum_m M_m rho M_m^dagger.
  QuantumOperation as_operation() const { return QuantumOperation(operators_); }

  friend bool operator==(const GeneralMeasurement& a,
                         const GeneralMeasurement& b);

 private:
  LabelSet outcomes_;
  std::vector<Matrix> operators_;
};

/// Measurement by orthogonal projectors {P_m} summing to the identity.
class ProjectiveMeasurement {
 public:
  ProjectiveMeasurement(LabelSet outcomes, std::vector<Matrix> projectors);

  std::size_t dim() const { return general_.dim(); }
  const LabelSet& outcomes() const { return general_.outcomes(); }
  const std::vector<Matrix>& projectors() const { return general_.operators(); }
  const Matrix& projector(std::size_t outcome) const {
    return general_.op(outcome);
  }
  const GeneralMeasurement& as_general() const { return general_; }

  /// Every failed condition: projector-ness of each element, pairwise
  /// orthogonality, and resolution of the identity. `name` prefixes the
  /// component names.
  std::vector<Violation> violations(const std::string& name,
                                    double tol = kTol) const;
  bool is_valid(double tol = kTol) const {
    return violations("M", tol).empty();
  }

  friend bool operator==(const ProjectiveMeasurement& a,
                         const ProjectiveMeasurement& b) {
    return a.general_ == b.general_;
  }

 private:
  GeneralMeasurement general_;
};

struct MeasurementOutcome {
  std::string outcome;
  double probability;
  DensityOperator post_state;
};

/// Outcomes in declaration order. Outcomes whose probability is at most
/// kTol are omitted; the rest carry M_m rho M_m^dagger / p(m).
std::vector<MeasurementOutcome> measure(const GeneralMeasurement& m,
                                        const DensityOperator& rho);
std::vector<MeasurementOutcome> measure(const ProjectiveMeasurement& m,
                                        const DensityOperator& rho);

/// "If A was measured in result i, apply branch i to B": elements
/// {P_i (x) E^i_k} on H_A (x) H_B. Every outcome needs a branch and every
/// branch needs an outcome; violations throw Error, shape problems
/// DimensionError.
QuantumOperation controlled_operation(
    const ProjectiveMeasurement& measurement,
    const std::map<std::string, QuantumOperation>& branches);

/// As controlled_operation with a general measurement: {M_i (x) E^i_k}.
QuantumOperation controlled_operation_general(
    const GeneralMeasurement& measurement,
    const std::map<std::string, QuantumOperation>& branches);

}  // namespace qfa
