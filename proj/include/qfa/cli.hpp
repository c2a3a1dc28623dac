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

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfa/machines.hpp"

namespace qfa {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotEquivalent = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics and usage to `err`.
///
///   validate <file>
///   eval <file> --input <x> [--output <y>] [--symbols single|csv]
///   convert <file> --to <kind> [--out <file>] [--accepting <s,...>]
///   equiv <file1> <file2> [--method bounded|algebraic] [--max-len N]
///   recognize <dfa-file> --as qfac|qcfa|mo1g [--out <file>]
///   bound <file1> <file2>
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

/// Kinds visited by the unique shortest conversion path from `from` to
/// `to`, both ends included. Throws TransformError when no path exists or
/// several shortest paths tie.
std::vector<std::string> conversion_path(std::string_view from,
                                         std::string_view to);

/// Applies conversion_path step by step. `accepting` is used by the
/// qsm -> ancilla step.
Machine convert_machine(const Machine& m, std::string_view to,
                        std::span<const std::string> accepting = {});

}  // namespace qfa
