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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfa {

/// A word over some alphabet, one label per symbol.
using Word = std::vector<std::string>;

/// Ordered set of labels. Declaration order fixes the basis index of every
/// state and the canonical order of every symbol.
class LabelSet {
 public:
  LabelSet() = default;
  /// Throws LabelError on empty labels, duplicates, or the reserved '|'.
  explicit LabelSet(std::vector<std::string> labels);
  LabelSet(std::initializer_list<std::string> labels)
      : LabelSet(std::vector<std::string>(labels)) {}

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& operator[](std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  /// `what` names the set in the error message ("state", "symbol", ...).
  std::size_t index_of(std::string_view label,
                       std::string_view what = "label") const;
  std::vector<std::size_t> encode(std::span<const std::string> word,
                                  std::string_view what = "symbol") const;
  Word decode(std::span<const std::size_t> indices) const;

  /// True when both sets hold the same labels, in any order.
  bool same_members(const LabelSet& other) const;

  friend bool operator==(const LabelSet& a, const LabelSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Joins a word for display; the empty word renders as "ε".
std::string format_word(std::span<const std::string> word);

/// Splits CLI input: every character is a symbol unless `csv`, in which case
/// symbols are comma separated. The empty string is the empty word.
Word parse_word(std::string_view text, bool csv = false);

}  // namespace qfa
