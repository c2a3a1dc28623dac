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

#include <cstddef>
#include <random>
#include <string_view>

#include "qfa/machines.hpp"

// Seeded generators of valid random machines for property tests.

namespace qfa::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// Entries i.i.d. standard complex normal.
Matrix gaussian(Rng& rng, std::size_t rows, std::size_t cols);

/// Haar-distributed unitary from the QR factorization of a Gaussian matrix.
Matrix unitary(Rng& rng, std::size_t n);

/// rows x cols matrix with orthonormal columns (rows >= cols).
Matrix isometry(Rng& rng, std::size_t rows, std::size_t cols);

/// Trace-one positive semi-definite matrix G G^dagger / Tr(G G^dagger).
Matrix density(Rng& rng, std::size_t n);

/// Hermitian matrix (G + G^dagger) / 2.
Matrix hermitian(Rng& rng, std::size_t n);

/// `count` Kraus blocks cut from one (count*dim) x dim isometry.
std::vector<Matrix> kraus_blocks(Rng& rng, std::size_t dim, std::size_t count);

QuantumOperation operation(Rng& rng, std::size_t dim, std::size_t kraus_count);

GeneralMeasurement general_measurement(Rng& rng, const LabelSet& outcomes,
                                       std::size_t dim);

/// Basis indices split at random between outcomes (some may be empty),
/// then rotated by a random unitary unless `diagonal`.
ProjectiveMeasurement projective_measurement(Rng& rng, const LabelSet& outcomes,
                                             std::size_t dim,
                                             bool diagonal = false);

/// Random subset of {0..n-1}, ascending.
std::vector<std::size_t> subset(Rng& rng, std::size_t n);

/// "prefix0", "prefix1", ...
LabelSet labels(std::string_view prefix, std::size_t n);

/// "a", "b", ... (n <= 26).
LabelSet alphabet(std::size_t n);

Dfa dfa(Rng& rng, std::size_t states, const LabelSet& alphabet);

Word word(Rng& rng, const LabelSet& alphabet, std::size_t length);

/// Accept projector on a random state subset, or a rotated subspace
/// projector when `diagonal_accept` is false.
Mo1gQfa mo1g(Rng& rng, std::size_t dim, std::size_t symbols,
             bool diagonal_accept = true);
Cl1Qfa cl1qfa(Rng& rng, std::size_t quantum, std::size_t control,
              std::size_t outcomes, std::size_t symbols);
Qfac1 qfac(Rng& rng, std::size_t quantum, std::size_t classical,
           std::size_t symbols);
Qcfa1 qcfa(Rng& rng, std::size_t quantum, std::size_t classical,
           std::size_t outcomes, std::size_t symbols);
AncillaQfa ancilla(Rng& rng, std::size_t dim, std::size_t outputs,
                   std::size_t symbols);
Qsm qsm(Rng& rng, std::size_t dim, std::size_t outputs, std::size_t symbols);

/// Machine of the named kind with every size drawn from 1..3 (2 for
/// outcome and symbol counts).
Machine machine(Rng& rng, std::string_view kind);

}  // namespace qfa::gen
