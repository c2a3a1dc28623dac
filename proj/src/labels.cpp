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

#include "qfa/labels.hpp"

#include <algorithm>

#include "qfa/error.hpp"

namespace qfa {

LabelSet::LabelSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& label = labels_[i];
    if (label.empty()) throw LabelError("empty label");
    if (label.find('|') != std::string::npos) {
      throw LabelError("label '" + label + "' contains reserved '|'");
    }
    if (!index_.emplace(label, i).second) {
      throw LabelError("duplicate label '" + label + "'");
    }
  }
}

std::optional<std::size_t> LabelSet::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabelSet::index_of(std::string_view label,
                               std::string_view what) const {
  if (auto i = find(label)) return *i;
  throw LabelError("unknown " + std::string(what) + " '" + std::string(label) +
                   "'");
}

std::vector<std::size_t> LabelSet::encode(std::span<const std::string> word,
                                          std::string_view what) const {
  std::vector<std::size_t> out;
  out.reserve(word.size());
  for (const auto& symbol : word) out.push_back(index_of(symbol, what));
  return out;
}

Word LabelSet::decode(std::span<const std::size_t> indices) const {
  Word out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(labels_.at(i));
  return out;
}

bool LabelSet::same_members(const LabelSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(labels_.begin(), labels_.end(),
                     [&](const std::string& l) { return other.contains(l); });
}

std::string format_word(std::span<const std::string> word) {
  if (word.empty()) return "ε";
  bool single_chars = std::all_of(word.begin(), word.end(),
                                  [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !single_chars) out += ',';
    out += word[i];
  }
  return out;
}

Word parse_word(std::string_view text, bool csv) {
  Word out;
  if (text.empty()) return out;
  if (!csv) {
    for (char c : text) out.emplace_back(1, c);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace qfa
