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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qfa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Frobenius tolerance shared by every structural predicate and by
/// probability comparisons.
inline constexpr double kTol = 1e-9;

/// |i> as a standard basis column vector, 0-indexed.
Vector basis_vector(std::size_t dim, std::size_t index);
/// |i><i|.
Matrix basis_projector(std::size_t dim, std::size_t index);
/// |row><col| as a dim x dim matrix unit.
Matrix matrix_unit(std::size_t dim, std::size_t row, std::size_t col);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Tr_B of an operator on H_A (x) H_B. Throws DimensionError unless `m` is
/// (dim_a * dim_b) square.
Matrix partial_trace_second(const Matrix& m, std::size_t dim_a,
                            std::size_t dim_b);

/// ||V^dagger V - I||_F. Square input makes this a unitarity residual.
double isometry_residual(const Matrix& v);
bool is_isometry(const Matrix& v, double tol = kTol);

/// max(||P - P^dagger||_F, ||P^2 - P||_F); infinity for non-square input.
double projector_residual(const Matrix& p);
bool is_projector(const Matrix& p, double tol = kTol);

/// Diagonal 0/1 matrix with ones exactly at `indices`. Throws DimensionError
/// on an out-of-range index.
Matrix projector_from_subset(std::size_t dim,
                             std::span<const std::size_t> indices);

/// If `p` is diagonal with 0/1 entries (within tol), the indices of its ones.
std::optional<std::vector<std::size_t>> subset_of_projector(
    const Matrix& p, double tol = kTol);

bool is_hermitian(const Matrix& m, double tol = kTol);

/// Smallest eigenvalue of the Hermitian part of a square matrix.
double min_eigenvalue(const Matrix& m);

/// Hermitian, PSD (smallest eigenvalue >= -tol) and unit trace.
bool is_density_operator(const Matrix& m, double tol = kTol);

/// Exact entrywise equality, tolerating differing shapes.
bool same_matrix(const Matrix& a, const Matrix& b);

/// A positive semi-definite, unit-trace operator.
class DensityOperator {
 public:
  /// Validates; throws DimensionError / Error when `m` is not a state.
  static DensityOperator from_matrix(Matrix m, double tol = kTol);
  /// |index><index|.
  static DensityOperator pure(std::size_t dim, std::size_t index);
  /// |psi><psi| / <psi|psi>.
  static DensityOperator from_vector(const Vector& psi);
  /// Wraps a matrix known to be a state (for example, a channel output).
  static DensityOperator unchecked(Matrix m);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  Complex trace() const { return matrix_.trace(); }

 private:
  explicit DensityOperator(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

}  // namespace qfa
