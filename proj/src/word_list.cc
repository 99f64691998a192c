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

#include "gatex/word_list.h"

#include <fstream>
#include <sstream>

#include "gatex/embedded_data.h"
#include "gatex/errors.h"
#include "gatex/text.h"

namespace gatex {

const WordList& WordList::builtin() {
  static const WordList list = parse(embedded::k_gendered_words);
  return list;
}

WordList WordList::parse(std::string_view text) {
  WordList list;
  std::set<std::string, std::less<>>* section = nullptr;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line == "[nouns]") {
      section = &list.nouns;
    } else if (line == "[pronouns]") {
      section = &list.pronouns;
    } else if (line == "[neutral_nouns]") {
      section = &list.neutral_nouns;
    } else if (line.front() == '[') {
      throw DataFormatError("word list line " + std::to_string(line_no) + ": unknown section " +
                            std::string(line));
    } else if (section == nullptr) {
      throw DataFormatError("word list line " + std::to_string(line_no) +
                            ": entry outside any section");
    } else {
      section->insert(to_lower(line));
    }
  }
  if (list.nouns.empty() && list.pronouns.empty()) {
    throw DataFormatError("word list is empty");
  }
  return list;
}

WordList WordList::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open word list " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::set<std::string, std::less<>> WordList::filter_set() const {
  std::set<std::string, std::less<>> all = nouns;
  all.insert(pronouns.begin(), pronouns.end());
  return all;
}

bool word_list_filter(std::string_view english,
                      const std::set<std::string, std::less<>>& word_list) {
  for (const Token& token : tokenize(english)) {
    if (word_list.contains(token.lower)) return true;
    if (token.kind == TokenKind::Contraction) {
      if (auto parts = split_contraction(token.lower); parts && word_list.contains(parts->host)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace gatex
