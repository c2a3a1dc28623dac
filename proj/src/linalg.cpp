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

#include "qfa/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qfa/error.hpp"

namespace qfa {

namespace {

Eigen::Index as_index(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

Vector basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis index out of range");
  Vector v = Vector::Zero(as_index(dim));
  v(as_index(index)) = 1.0;
  return v;
}

Matrix basis_projector(std::size_t dim, std::size_t index) {
  return matrix_unit(dim, index, index);
}

Matrix matrix_unit(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) throw DimensionError("matrix unit out of range");
  Matrix m = Matrix::Zero(as_index(dim), as_index(dim));
  m(as_index(row), as_index(col)) = 1.0;
  return m;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace_second(const Matrix& m, std::size_t dim_a,
                            std::size_t dim_b) {
  const auto na = as_index(dim_a);
  const auto nb = as_index(dim_b);
  if (m.rows() != na * nb || m.cols() != na * nb) {
    throw DimensionError("partial trace: expected a " +
                         std::to_string(dim_a * dim_b) + "-square operator");
  }
  Matrix out = Matrix::Zero(na, na);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out(i, j) = m.block(i * nb, j * nb, nb, nb).trace();
    }
  }
  return out;
}

double isometry_residual(const Matrix& v) {
  Matrix gram = v.adjoint() * v;
  gram -= Matrix::Identity(v.cols(), v.cols());
  return gram.norm();
}

bool is_isometry(const Matrix& v, double tol) {
  return isometry_residual(v) <= tol;
}

double projector_residual(const Matrix& p) {
  if (p.rows() != p.cols()) return std::numeric_limits<double>::infinity();
  double hermitian = (p - p.adjoint()).norm();
  double idempotent = (p * p - p).norm();
  return std::max(hermitian, idempotent);
}

bool is_projector(const Matrix& p, double tol) {
  return projector_residual(p) <= tol;
}

Matrix projector_from_subset(std::size_t dim,
                             std::span<const std::size_t> indices) {
  Matrix p = Matrix::Zero(as_index(dim), as_index(dim));
  for (auto i : indices) {
    if (i >= dim) {
      throw DimensionError("projector index " + std::to_string(i) +
                           " out of range for dimension " +
                           std::to_string(dim));
    }
    p(as_index(i), as_index(i)) = 1.0;
  }
  return p;
}

std::optional<std::vector<std::size_t>> subset_of_projector(const Matrix& p,
                                                            double tol) {
  if (p.rows() != p.cols()) return std::nullopt;
  Matrix off = p;
  off.diagonal().setZero();
  if (off.norm() > tol) return std::nullopt;
  std::vector<std::size_t> ones;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    Complex d = p(i, i);
    if (std::abs(d - 1.0) <= tol) {
      ones.push_back(static_cast<std::size_t>(i));
    } else if (std::abs(d) > tol) {
      return std::nullopt;
    }
  }
  return ones;
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

double min_eigenvalue(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_density_operator(const Matrix& m, double tol) {
  if (m.rows() == 0 || !is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0)) > tol) return false;
  return min_eigenvalue(m) >= -tol;
}

bool same_matrix(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

DensityOperator DensityOperator::from_matrix(Matrix m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("density operator must be a non-empty square matrix");
  }
  if (!is_density_operator(m, tol)) {
    throw Error("matrix is not a density operator");
  }
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::pure(std::size_t dim, std::size_t index) {
  return DensityOperator(basis_projector(dim, index));
}

DensityOperator DensityOperator::from_vector(const Vector& psi) {
  double norm2 = psi.squaredNorm();
  if (norm2 == 0.0) throw Error("cannot normalize the zero vector");
  return DensityOperator(psi * psi.adjoint() / norm2);
}

DensityOperator DensityOperator::unchecked(Matrix m) {
  return DensityOperator(std::move(m));
}

}  // namespace qfa
