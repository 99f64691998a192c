// Copyright 2026 The gatex Authors. All Rights Reserved.
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
#include <set>
#include <string>
#include <string_view>

namespace gatex {

// Gendered English vocabulary: nouns, gendered pronouns, and the neutral
// nouns that replace gendered ones in neutral variants. Loaded from a plain
// text file with [nouns], [pronouns] and [neutral_nouns] sections.
struct WordList {
  std::set<std::string, std::less<>> nouns;
  std::set<std::string, std::less<>> pronouns;
  std::set<std::string, std::less<>> neutral_nouns;

  static const WordList& builtin();
  static WordList parse(std::string_view text);
  static WordList load(const std::filesystem::path& path);

  // nouns + pronouns: the candidate-selection filter set.
  std::set<std::string, std::less<>> filter_set() const;
};

// True iff any case-folded token of `english` (or the host of a contraction
// such as "she's") is in `word_list`.
bool word_list_filter(std::string_view english, const std::set<std::string, std::less<>>& word_list);

}  // namespace gatex
