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

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gatex/text.h"

namespace gatex {

// One cell of the pronoun table: a (row, column) coordinate.
struct PronounCell {
  PronounCategory category;
  Gender gender;

  auto operator<=>(const PronounCell&) const = default;
};

// The table form for a category and gender, lowercase. Total over 5 x 3.
std::string_view lookup(PronounCategory category, Gender gender);

// Every cell whose form equals `lower`, optionally restricted to one gender.
// Empty for non-pronouns; two cells for "her" and "his"; one otherwise.
// "themself" is accepted as the neutral reflexive.
std::vector<PronounCell> categories_of(std::string_view lower,
                                       std::optional<Gender> gender_hint = std::nullopt);

// The column a pronoun form belongs to. Each form lives in exactly one column.
std::optional<Gender> gender_of(std::string_view lower);

// Feminine or masculine column form.
bool is_gendered_pronoun(std::string_view lower);

// Lexicons for verb agreement and for the her/his heuristics. The bundled
// defaults come from data/agreement.txt; a replacement file with the same
// section layout can be loaded at run time.
class AgreementRules {
 public:
  static const AgreementRules& builtin();
  static AgreementRules parse(std::string_view text);
  static AgreementRules load(const std::filesystem::path& path);

  // Plural-agreeing form of a third-person-singular verb (lowercase), or
  // nullopt when `lower` is not recognized as one.
  std::optional<std::string> plural_of(std::string_view lower) const;

  // Singular/plural agreement pair in either order ("does"/"do").
  bool is_agreement_pair(std::string_view a, std::string_view b) const;

  // Any form taking part in the irregular table, either side.
  bool is_irregular_form(std::string_view lower) const;

  // Plural clitic for a subject contraction. `has_reading` selects the
  // "has" reading of 's. Returns nullopt for unknown clitics.
  std::optional<std::string> plural_clitic(std::string_view clitic_lower,
                                           bool has_reading) const;

  bool is_adverb(std::string_view lower) const { return adverbs_.contains(std::string(lower)); }
  bool is_causative(std::string_view lower) const {
    return causatives_.contains(std::string(lower));
  }
  bool is_base_verb(std::string_view lower) const {
    return base_verbs_.contains(std::string(lower));
  }
  bool is_preposition(std::string_view lower) const {
    return prepositions_.contains(std::string(lower));
  }
  bool is_conjunction(std::string_view lower) const {
    return conjunctions_.contains(std::string(lower));
  }
  bool is_function_word(std::string_view lower) const {
    return function_words_.contains(std::string(lower));
  }

  // Past participle by closed list or -ed/-en suffix, unless listed as an
  // adjectival form.
  bool is_participle(std::string_view lower) const;

  const std::map<std::string, std::string>& irregular() const { return irregular_; }

 private:
  std::map<std::string, std::string> irregular_;
  std::map<std::string, std::string> clitics_;
  std::map<std::string, std::string> regular_exceptions_;
  std::set<std::string, std::less<>> adverbs_;
  std::set<std::string, std::less<>> participles_;
  std::set<std::string, std::less<>> adjectival_;
  std::set<std::string, std::less<>> causatives_;
  std::set<std::string, std::less<>> base_verbs_;
  std::set<std::string, std::less<>> prepositions_;
  std::set<std::string, std::less<>> conjunctions_;
  std::set<std::string, std::less<>> function_words_;
};

// Strips a regular third-person -s ending: -ies -> -y, -es -> "" after
// ss/x/z/ch/sh/o, else -s -> "". nullopt if `lower` has no such ending.
std::optional<std::string> strip_third_person(std::string_view lower);

struct VerbAdjustment {
  std::vector<Token> tokens;
  std::optional<std::size_t> verb_index;
  // False when no agreeing verb was located (e.g. past tense or elliptical
  // sentences). The tokens are then returned unchanged.
  bool agreeing_verb_found = false;
};

// Converts the finite verb agreeing with the subject at `subject_index`
// (already rewritten to "they", or a "they" contraction) to its plural
// form. Tries, in order: the subject's own clitic ("they's" -> "they're"),
// the first non-adverb token to the right, and in questions the token
// immediately to the left ("Is they" -> "Are they"). Alters at most one
// token and never changes the token count.
VerbAdjustment pluralize_verb(std::span<const Token> tokens, std::size_t subject_index,
                              const AgreementRules& rules = AgreementRules::builtin());

}  // namespace gatex
