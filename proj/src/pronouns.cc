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

#include "gatex/pronouns.h"

#include <array>
#include <fstream>
#include <sstream>

#include "gatex/embedded_data.h"
#include "gatex/errors.h"

namespace gatex {
namespace {

// Rows follow PronounCategory, columns follow Gender.
constexpr std::array<std::array<std::string_view, 3>, 5> kTable = {{
    {"she", "he", "they"},
    {"her", "him", "them"},
    {"her", "his", "their"},
    {"hers", "his", "theirs"},
    {"herself", "himself", "themselves"},
}};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool all_alpha_lower(std::string_view s) {
  for (char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return !s.empty();
}

std::vector<std::string> fields_of(std::string_view line) {
  std::vector<std::string> fields;
  std::istringstream in{std::string(line)};
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

bool is_question_ahead(std::span<const Token> tokens, std::size_t from) {
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const std::string& s = tokens[i].surface;
    if (s == "?") return true;
    if (s == "." || s == "!") return false;
  }
  return false;
}

}  // namespace

std::string_view lookup(PronounCategory category, Gender gender) {
  return kTable[static_cast<std::size_t>(category)][static_cast<std::size_t>(gender)];
}

std::vector<PronounCell> categories_of(std::string_view lower,
                                       std::optional<Gender> gender_hint) {
  std::vector<PronounCell> cells;
  if (lower == "themself") {
    if (!gender_hint || *gender_hint == Gender::Neutral) {
      cells.push_back({PronounCategory::Reflexive, Gender::Neutral});
    }
    return cells;
  }
  for (PronounCategory category : kAllCategories) {
    for (Gender gender : kAllGenders) {
      if (gender_hint && *gender_hint != gender) continue;
      if (lookup(category, gender) == lower) cells.push_back({category, gender});
    }
  }
  return cells;
}

std::optional<Gender> gender_of(std::string_view lower) {
  auto cells = categories_of(lower);
  if (cells.empty()) return std::nullopt;
  return cells.front().gender;
}

bool is_gendered_pronoun(std::string_view lower) {
  auto gender = gender_of(lower);
  return gender && *gender != Gender::Neutral;
}

const AgreementRules& AgreementRules::builtin() {
  static const AgreementRules rules = parse(embedded::k_agreement);
  return rules;
}

AgreementRules AgreementRules::parse(std::string_view text) {
  AgreementRules rules;
  std::map<std::string, std::map<std::string, std::string>*> pairs = {
      {"irregular", &rules.irregular_},
      {"clitics", &rules.clitics_},
      {"regular_exceptions", &rules.regular_exceptions_},
  };
  std::map<std::string, std::set<std::string, std::less<>>*> lists = {
      {"adverbs", &rules.adverbs_},           {"participles", &rules.participles_},
      {"adjectival", &rules.adjectival_},     {"causatives", &rules.causatives_},
      {"base_verbs", &rules.base_verbs_},     {"prepositions", &rules.prepositions_},
      {"conjunctions", &rules.conjunctions_}, {"function_words", &rules.function_words_},
  };

  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw DataFormatError("agreement data line " + std::to_string(line_no) +
                              ": malformed section header");
      }
      section = std::string(line.substr(1, line.size() - 2));
      if (!pairs.contains(section) && !lists.contains(section)) {
        throw DataFormatError("agreement data line " + std::to_string(line_no) +
                              ": unknown section [" + section + "]");
      }
      continue;
    }
    if (section.empty()) {
      throw DataFormatError("agreement data line " + std::to_string(line_no) +
                            ": entry outside any section");
    }
    auto fields = fields_of(line);
    if (auto it = pairs.find(section); it != pairs.end()) {
      if (fields.size() != 2) {
        throw DataFormatError("agreement data line " + std::to_string(line_no) +
                              ": expected two columns in [" + section + "]");
      }
      (*it->second)[to_lower(fields[0])] = to_lower(fields[1]);
    } else {
      if (fields.size() != 1) {
        throw DataFormatError("agreement data line " + std::to_string(line_no) +
                              ": expected one column in [" + section + "]");
      }
      lists[section]->insert(to_lower(fields[0]));
    }
  }
  return rules;
}

AgreementRules AgreementRules::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open agreement data file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::optional<std::string> strip_third_person(std::string_view lower) {
  if (!all_alpha_lower(lower) || lower.size() < 3 || lower.back() != 's') return std::nullopt;
  if (ends_with(lower, "ss") || ends_with(lower, "us") || ends_with(lower, "is")) {
    return std::nullopt;
  }
  if (ends_with(lower, "ies") && lower.size() > 4) {
    return std::string(lower.substr(0, lower.size() - 3)) + "y";
  }
  if (ends_with(lower, "es")) {
    const std::string_view stem = lower.substr(0, lower.size() - 2);
    for (std::string_view sibilant : {"ss", "x", "zz", "ch", "sh", "o"}) {
      if (ends_with(stem, sibilant)) return std::string(stem);
    }
  }
  return std::string(lower.substr(0, lower.size() - 1));
}

std::optional<std::string> AgreementRules::plural_of(std::string_view lower) const {
  const std::string key(lower);
  if (auto it = irregular_.find(key); it != irregular_.end()) return it->second;
  if (auto it = regular_exceptions_.find(key); it != regular_exceptions_.end()) {
    return it->second;
  }
  if (adverbs_.contains(key) || function_words_.contains(key) || prepositions_.contains(key) ||
      conjunctions_.contains(key) || is_pronoun_form(key)) {
    return std::nullopt;
  }
  return strip_third_person(lower);
}

bool AgreementRules::is_agreement_pair(std::string_view a, std::string_view b) const {
  const std::string la = to_lower(a);
  const std::string lb = to_lower(b);
  if (la == lb) return false;
  auto pa = plural_of(la);
  auto pb = plural_of(lb);
  return (pa && *pa == lb) || (pb && *pb == la);
}

bool AgreementRules::is_irregular_form(std::string_view lower) const {
  for (const auto& [singular, plural] : irregular_) {
    if (singular == lower || plural == lower) return true;
  }
  return false;
}

std::optional<std::string> AgreementRules::plural_clitic(std::string_view clitic_lower,
                                                         bool has_reading) const {
  std::string key = "'" + std::string(clitic_lower);
  if (clitic_lower == "s") key += has_reading ? "+has" : "+is";
  auto it = clitics_.find(key);
  if (it == clitics_.end()) return std::nullopt;
  std::string value = it->second;
  if (!value.empty() && value.front() == '\'') value.erase(0, 1);
  return value;
}

bool AgreementRules::is_participle(std::string_view lower) const {
  if (adjectival_.contains(lower)) return false;
  if (participles_.contains(lower)) return true;
  if (!all_alpha_lower(lower)) return false;
  if (ends_with(lower, "ed") && lower.size() >= 4 && !ends_with(lower, "eed")) return true;
  if (ends_with(lower, "en") && lower.size() >= 5 && !ends_with(lower, "een")) return true;
  return false;
}

VerbAdjustment pluralize_verb(std::span<const Token> tokens, std::size_t subject_index,
                              const AgreementRules& rules) {
  VerbAdjustment result;
  result.tokens.assign(tokens.begin(), tokens.end());
  if (subject_index >= tokens.size()) return result;

  auto next_content = [&](std::size_t from) {
    std::size_t j = from;
    while (j < tokens.size() && tokens[j].kind == TokenKind::Word &&
           rules.is_adverb(tokens[j].lower)) {
      ++j;
    }
    return j;
  };

  const Token& subject = tokens[subject_index];
  if (subject.kind == TokenKind::Contraction) {
    auto parts = split_contraction(subject.surface);
    if (!parts) return result;
    const std::string clitic = to_lower(parts->clitic);
    bool has_reading = false;
    if (clitic == "s") {
      const std::size_t j = next_content(subject_index + 1);
      has_reading = j < tokens.size() && rules.is_participle(tokens[j].lower);
    }
    auto plural = rules.plural_clitic(clitic, has_reading);
    if (!plural) return result;
    Token updated = subject;
    updated.surface = parts->host + parts->apostrophe + apply_case(parts->clitic, *plural);
    updated.lower = to_lower(updated.surface);
    result.tokens[subject_index] = std::move(updated);
    result.verb_index = subject_index;
    result.agreeing_verb_found = true;
    return result;
  }

  const std::size_t right = next_content(subject_index + 1);
  if (right < tokens.size() &&
      (tokens[right].kind == TokenKind::Word || tokens[right].kind == TokenKind::Contraction)) {
    if (auto plural = rules.plural_of(tokens[right].lower)) {
      result.tokens[right] = replace_token(tokens[right], *plural);
      result.verb_index = right;
      result.agreeing_verb_found = true;
      return result;
    }
  }

  if (subject_index > 0 && is_question_ahead(tokens, subject_index + 1)) {
    const std::size_t left = subject_index - 1;
    auto it = rules.irregular().find(tokens[left].lower);
    if (it != rules.irregular().end()) {
      result.tokens[left] = replace_token(tokens[left], it->second);
      result.verb_index = left;
      result.agreeing_verb_found = true;
    }
  }
  return result;
}

}  // namespace gatex
