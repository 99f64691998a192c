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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gatex {

enum class Gender { Feminine, Masculine, Neutral };

inline constexpr std::array<Gender, 3> kAllGenders = {
    Gender::Feminine, Gender::Masculine, Gender::Neutral};

enum class PronounCategory {
  Subject,
  Object,
  PossessiveDeterminer,
  PossessivePronoun,
  Reflexive,
};

inline constexpr std::array<PronounCategory, 5> kAllCategories = {
    PronounCategory::Subject, PronounCategory::Object,
    PronounCategory::PossessiveDeterminer, PronounCategory::PossessivePronoun,
    PronounCategory::Reflexive};

std::string_view to_string(Gender gender);
std::string_view to_string(PronounCategory category);

// 'F', 'M' or 'N'.
char gender_code(Gender gender);
std::optional<Gender> gender_from_code(char code);

enum class TokenKind { Word, Pronoun, Contraction, Punctuation };

std::string_view to_string(TokenKind kind);

// One surface unit of a sentence. Concatenating space + surface over a token
// list, followed by the last token's trailing_space, reproduces the text that
// was tokenized.
struct Token {
  std::string surface;
  std::string lower;
  TokenKind kind = TokenKind::Word;
  std::string space;           // whitespace preceding the token, verbatim
  std::string trailing_space;  // only set on the final token
  bool sentence_initial = false;

  bool leading_space() const { return !space.empty(); }
  bool operator==(const Token&) const = default;
};

// Lossless rule-based tokenizer. Splits on whitespace and punctuation and
// keeps apostrophe-internal forms ("she's", "doesn't") as single tokens.
// Input consisting only of whitespace yields a single empty Word token that
// carries the whitespace.
std::vector<Token> tokenize(std::string_view text);

std::string detokenize(std::span<const Token> tokens);

// ASCII case folding; other bytes pass through unchanged.
std::string to_lower(std::string_view text);

// Whitespace-delimited words, as used by the corpus metrics.
std::vector<std::string> split_words(std::string_view text);

std::string_view trim(std::string_view text);

// True for the forms she, he, they, her, him, them, his, their, hers,
// theirs, herself, himself, themselves and the accepted input "themself".
bool is_pronoun_form(std::string_view lower);

struct ContractionParts {
  std::string host;
  std::string apostrophe;
  std::string clitic;
};

// Splits a contraction at its first apostrophe ("She's" -> "She", "'", "s").
std::optional<ContractionParts> split_contraction(std::string_view surface);

// The case-folded pronoun a token carries: the token itself for Pronoun
// tokens, the host for contractions such as "she's"; nullopt otherwise.
std::optional<std::string> pronoun_of(const Token& token);

// Renders `replacement_lower` with the casing pattern of `model`:
// all-caps stays all-caps, an initial capital stays initial, else lowercase.
// `force_initial` capitalizes the first letter regardless of the model.
std::string apply_case(std::string_view model, std::string_view replacement_lower,
                       bool force_initial = false);

// A token equal to `original` except that its text becomes
// `replacement_lower` cased after the original. Whitespace and the
// sentence_initial flag carry over.
Token replace_token(const Token& original, std::string_view replacement_lower);

// Replaces only the host of a contraction token, keeping apostrophe and
// clitic verbatim ("She's" + "they" -> "They's").
Token replace_contraction_host(const Token& original, std::string_view host_lower);

}  // namespace gatex
