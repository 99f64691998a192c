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

#include "gatex/text.h"

#include <algorithm>
#include <cstdint>

namespace gatex {
namespace {

constexpr std::array<std::string_view, 14> kPronounForms = {
    "she",  "he",     "they",    "her",     "him",        "them",    "his",
    "their", "hers", "theirs", "herself", "himself", "themselves", "themself"};

struct CodePoint {
  char32_t value;
  std::size_t length;
  bool valid;
};

CodePoint decode(std::string_view text, std::size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) return {lead, 1, true};
  std::size_t length = 0;
  char32_t value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {lead, 1, false};
  }
  if (pos + length > text.size()) return {lead, 1, false};
  for (std::size_t i = 1; i < length; ++i) {
    const auto cont = static_cast<unsigned char>(text[pos + i]);
    if ((cont & 0xC0) != 0x80) return {lead, 1, false};
    value = (value << 6) | (cont & 0x3F);
  }
  return {value, length, true};
}

bool is_space(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

bool is_ascii_alpha(char32_t c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_ascii_digit(char32_t c) { return c >= '0' && c <= '9'; }

bool is_unicode_punct(char32_t c) {
  switch (c) {
    case U'¡': case U'«': case U'»': case U'¿':
    case U'\u2013': case U'\u2014': case U'‘': case U'’':
    case U'“': case U'”': case U'…':
      return true;
    default:
      return false;
  }
}

bool is_word_char(const CodePoint& cp) {
  if (!cp.valid) return true;
  if (cp.value < 0x80) return is_ascii_alpha(cp.value) || is_ascii_digit(cp.value);
  return !is_unicode_punct(cp.value);
}

bool is_letter(const CodePoint& cp) {
  if (!cp.valid) return true;
  if (cp.value < 0x80) return is_ascii_alpha(cp.value);
  return !is_unicode_punct(cp.value);
}

bool is_sentence_terminal(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?" || surface == "…";
}

bool contains_apostrophe(std::string_view surface) {
  return surface.find('\'') != std::string_view::npos ||
         surface.find("’") != std::string_view::npos;
}

TokenKind classify_word(std::string_view surface, std::string_view lower) {
  if (contains_apostrophe(surface)) return TokenKind::Contraction;
  if (is_pronoun_form(lower)) return TokenKind::Pronoun;
  return TokenKind::Word;
}

bool starts_with_letter(std::string_view surface) {
  return !surface.empty() && is_letter(decode(surface, 0));
}

bool starts_upper(std::string_view surface) {
  return !surface.empty() && surface[0] >= 'A' && surface[0] <= 'Z';
}

}  // namespace

std::string_view to_string(Gender gender) {
  switch (gender) {
    case Gender::Feminine: return "Feminine";
    case Gender::Masculine: return "Masculine";
    case Gender::Neutral: return "Neutral";
  }
  return "?";
}

std::string_view to_string(PronounCategory category) {
  switch (category) {
    case PronounCategory::Subject: return "Subject";
    case PronounCategory::Object: return "Object";
    case PronounCategory::PossessiveDeterminer: return "PossessiveDeterminer";
    case PronounCategory::PossessivePronoun: return "PossessivePronoun";
    case PronounCategory::Reflexive: return "Reflexive";
  }
  return "?";
}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Pronoun: return "Pronoun";
    case TokenKind::Contraction: return "Contraction";
    case TokenKind::Punctuation: return "Punctuation";
  }
  return "?";
}

char gender_code(Gender gender) {
  switch (gender) {
    case Gender::Feminine: return 'F';
    case Gender::Masculine: return 'M';
    case Gender::Neutral: return 'N';
  }
  return '?';
}

std::optional<Gender> gender_from_code(char code) {
  switch (code) {
    case 'F': case 'f': return Gender::Feminine;
    case 'M': case 'm': return Gender::Masculine;
    case 'N': case 'n': return Gender::Neutral;
    default: return std::nullopt;
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string pending_space;
  bool seen_alpha = false;
  bool after_terminal = false;
  std::size_t pos = 0;

  auto push = [&](std::size_t begin, std::size_t end, bool is_word) {
    Token token;
    token.surface = std::string(text.substr(begin, end - begin));
    token.lower = to_lower(token.surface);
    token.kind = is_word ? classify_word(token.surface, token.lower) : TokenKind::Punctuation;
    token.space = std::move(pending_space);
    pending_space.clear();
    if (is_word && starts_with_letter(token.surface)) {
      token.sentence_initial = !seen_alpha || (after_terminal && starts_upper(token.surface));
      seen_alpha = true;
      after_terminal = false;
    } else if (!is_word) {
      if (is_sentence_terminal(token.surface)) {
        after_terminal = true;
      } else if (token.surface == "," || token.surface == ";" || token.surface == ":") {
        after_terminal = false;
      }
    } else {
      after_terminal = false;
    }
    tokens.push_back(std::move(token));
  };

  while (pos < text.size()) {
    const CodePoint cp = decode(text, pos);
    if (cp.valid && is_space(cp.value)) {
      pending_space.append(text.substr(pos, cp.length));
      pos += cp.length;
      continue;
    }
    if (is_word_char(cp)) {
      const std::size_t begin = pos;
      pos += cp.length;
      while (pos < text.size()) {
        const CodePoint next = decode(text, pos);
        if (is_word_char(next)) {
          pos += next.length;
          continue;
        }
        // Apostrophe joins two word parts when a letter follows it.
        if (next.valid && is_apostrophe(next.value) && pos + next.length < text.size()) {
          const CodePoint after = decode(text, pos + next.length);
          if (is_letter(after)) {
            pos += next.length + after.length;
            continue;
          }
        }
        break;
      }
      push(begin, pos, true);
      continue;
    }
    push(pos, pos + cp.length, false);
    pos += cp.length;
  }

  if (!pending_space.empty()) {
    if (tokens.empty()) {
      Token blank;
      blank.space = std::move(pending_space);
      tokens.push_back(std::move(blank));
    } else {
      tokens.back().trailing_space = std::move(pending_space);
    }
  }
  return tokens;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (const Token& token : tokens) {
    out += token.space;
    out += token.surface;
    out += token.trailing_space;
  }
  return out;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t begin = pos;
    while (pos < text.size() && !is_space(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > begin) words.emplace_back(text.substr(begin, pos - begin));
  }
  return words;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && is_space(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

bool is_pronoun_form(std::string_view lower) {
  return std::find(kPronounForms.begin(), kPronounForms.end(), lower) != kPronounForms.end();
}

std::optional<ContractionParts> split_contraction(std::string_view surface) {
  std::size_t pos = 0;
  while (pos < surface.size()) {
    const CodePoint cp = decode(surface, pos);
    if (cp.valid && is_apostrophe(cp.value) && pos > 0) {
      return ContractionParts{std::string(surface.substr(0, pos)),
                              std::string(surface.substr(pos, cp.length)),
                              std::string(surface.substr(pos + cp.length))};
    }
    pos += cp.length;
  }
  return std::nullopt;
}

std::optional<std::string> pronoun_of(const Token& token) {
  if (token.kind == TokenKind::Pronoun) return token.lower;
  if (token.kind == TokenKind::Contraction) {
    if (auto parts = split_contraction(token.lower); parts && is_pronoun_form(parts->host)) {
      return parts->host;
    }
  }
  return std::nullopt;
}

std::string apply_case(std::string_view model, std::string_view replacement_lower,
                       bool force_initial) {
  std::size_t letters = 0;
  std::size_t upper = 0;
  for (char c : model) {
    if (c >= 'A' && c <= 'Z') {
      ++letters;
      ++upper;
    } else if (c >= 'a' && c <= 'z') {
      ++letters;
    }
  }
  std::string out(replacement_lower);
  if (letters > 0 && upper == letters && (letters > 1 || model.size() == 1)) {
    for (char& c : out) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
  }
  if ((starts_upper(model) || force_initial) && !out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

Token replace_token(const Token& original, std::string_view replacement_lower) {
  Token token = original;
  token.surface = apply_case(original.surface, replacement_lower, original.sentence_initial);
  token.lower = to_lower(token.surface);
  token.kind = classify_word(token.surface, token.lower);
  return token;
}

Token replace_contraction_host(const Token& original, std::string_view host_lower) {
  auto parts = split_contraction(original.surface);
  if (!parts) return replace_token(original, host_lower);
  Token token = original;
  token.surface = apply_case(parts->host, host_lower, original.sentence_initial) +
                  parts->apostrophe + parts->clitic;
  token.lower = to_lower(token.surface);
  token.kind = TokenKind::Contraction;
  return token;
}

}  // namespace gatex
