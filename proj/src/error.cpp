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

#include "qfa/error.hpp"

#include <cstdio>

namespace qfa {

std::string Violation::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", residual);
  return component + " " + message + ", residual " + buf;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "machine fails validation";
  for (const auto& v : violations) out += "\n  " + v.to_string();
  return out;
}

std::string locate(const std::string& message, const std::string& path,
                   std::size_t line, std::size_t column) {
  std::string out;
  if (line > 0) {
    out = "line " + std::to_string(line) + ", column " +
          std::to_string(column) + ": ";
  }
  if (!path.empty()) out += "at '" + path + "': ";
  return out + message;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(std::string message, std::string path, std::size_t line,
                       std::size_t column)
    : Error(locate(message, path, line, column)),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

}  // namespace qfa
