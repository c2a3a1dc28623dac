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

#include <filesystem>
#include <string>
#include <string_view>

#include "qfa/machines.hpp"

// JSON machine documents.
//
//   {"kind": "<kind>", "version": 1, ...kind-specific fields}
//
// Complex scalars are [re, im], matrices are arrays of rows, label lists are
// arrays of strings, and maps over several indices use keys joined with
// '|' ("state|symbol"). Unknown fields are rejected. Field sets per kind:
//
//   dfa      states alphabet initial accepting delta{"s|a": t}
//   mo1g     states alphabet initial operations{a: [E...]}
//            accept_projector (or accepting: [states] when hand-written)
//   cl1qfa   states alphabet outcomes initial unitaries{a: U}
//            measurement{c: P} control{states initial accepting delta{"s|c": t}}
//   qfac     quantum_states classical_states alphabet initial_quantum
//            initial_classical unitaries{"s|a": U} transitions{"s|a": t}
//            final_measurements{s: {"a": P, "r": P}}
//   qcfa     quantum_states classical_states alphabet outcomes initial_quantum
//            initial_classical measurements{"s|a": {c: M}}
//            transitions{"s|a|c": t} accepting
//   ancilla  states alphabet output_alphabet initial transitions{"a|w": V}
//            accepting
//   qsm      states alphabet output_alphabet initial transitions{"a|w": V}

namespace qfa {

inline constexpr int kFormatVersion = 1;

/// Parses and validates. Throws ParseError (syntax errors carry line and
/// column, semantic errors the field path) or ValidationError.
Machine parse_machine(std::string_view text);

/// Parses without running numerical validation.
Machine parse_machine_unchecked(std::string_view text);

/// Canonical text: sorted keys, doubles with 17 significant digits, fixed
/// layout. Equal machines serialize to identical bytes.
std::string serialize_machine(const Machine& m);

/// Reads a file and parses it; `validate` selects parse_machine over
/// parse_machine_unchecked. Throws Error when the file cannot be read.
Machine load_machine(const std::filesystem::path& path, bool validate = true);

/// Writes serialize_machine(m). Throws Error on I/O failure.
void save_machine(const std::filesystem::path& path, const Machine& m);

}  // namespace qfa
