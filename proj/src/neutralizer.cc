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

#include "gatex/neutralizer.h"

#include "gatex/embedded_data.h"
#include "gatex/errors.h"

namespace gatex {
namespace {

constexpr std::string_view kPlaceholder = "{input_text}";

std::size_t skip_adverbs(std::span<const Token> tokens, std::size_t from,
                         const AgreementRules& rules) {
  std::size_t j = from;
  while (j < tokens.size() && tokens[j].kind == TokenKind::Word &&
         rules.is_adverb(tokens[j].lower)) {
    ++j;
  }
  return j;
}

std::vector<TokenEdit> diff_edits(std::span<const Token> before, std::span<const Token> after) {
  std::vector<TokenEdit> edits;
  if (before.size() != after.size()) return edits;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].surface != after[i].surface) {
      edits.push_back({i, before[i].surface, after[i].surface});
    }
  }
  return edits;
}

bool is_none_reply(std::string_view reply) {
  std::string folded = to_lower(trim(reply));
  if (!folded.empty() && folded.back() == '.') folded.pop_back();
  return folded == "none";
}

NeutralRewrite neutralize_rule_based(std::string_view text, const AgreementRules& rules) {
  NeutralRewrite rewrite;
  rewrite.provider = Provider::RuleBased;
  const std::vector<Token> input = tokenize(text);
  std::vector<Token> out = input;
  std::vector<std::size_t> subjects;

  for (std::size_t i = 0; i < input.size(); ++i) {
    auto pronoun = pronoun_of(input[i]);
    if (!pronoun || !is_gendered_pronoun(*pronoun)) continue;
    PronounCategory category;
    if (*pronoun == "her" || *pronoun == "his") {
      category = disambiguate(input, i, rules).category;
    } else {
      category = categories_of(*pronoun).front().category;
    }
    const std::string_view neutral = lookup(category, Gender::Neutral);
    out[i] = input[i].kind == TokenKind::Pronoun ? replace_token(input[i], neutral)
                                                 : replace_contraction_host(input[i], neutral);
    if (category == PronounCategory::Subject) subjects.push_back(i);
  }

  for (std::size_t subject : subjects) {
    VerbAdjustment adjusted = pluralize_verb(out, subject, rules);
    if (!adjusted.agreeing_verb_found) {
      rewrite.diagnostics.push_back("NoAgreeingVerbFound: token " + std::to_string(subject));
    }
    // "'s got" reads as possessive "has got"; habitual "is" is not ruled out.
    if (input[subject].kind == TokenKind::Contraction && subject + 1 < input.size() &&
        input[subject + 1].lower == "got") {
      if (auto parts = split_contraction(input[subject].lower); parts && parts->clitic == "s") {
        rewrite.diagnostics.push_back("AmbiguousClitic: token " + std::to_string(subject) +
                                      " read as 's = has before \"got\"");
      }
    }
    out = std::move(adjusted.tokens);
  }

  rewrite.edits = diff_edits(input, out);
  rewrite.text = detokenize(out);
  rewrite.tokens = std::move(out);
  return rewrite;
}

NeutralRewrite from_reply(std::string_view input, std::string reply) {
  NeutralRewrite rewrite;
  rewrite.provider = Provider::External;
  while (!reply.empty() && (reply.back() == '\n' || reply.back() == '\r')) reply.pop_back();
  if (is_none_reply(reply)) {
    rewrite.none_response = true;
    rewrite.text = std::string(input);
    rewrite.tokens = tokenize(input);
    rewrite.diagnostics.push_back("NoneResponse: provider reported no rewrite needed");
    return rewrite;
  }
  rewrite.text = std::move(reply);
  rewrite.tokens = tokenize(rewrite.text);
  const std::vector<Token> before = tokenize(input);
  if (before.size() == rewrite.tokens.size()) {
    rewrite.edits = diff_edits(before, rewrite.tokens);
  } else {
    rewrite.diagnostics.push_back("TokenCountChanged: " + std::to_string(before.size()) +
                                  " -> " + std::to_string(rewrite.tokens.size()));
  }
  return rewrite;
}

}  // namespace

std::string_view prompt_text(PromptTemplate prompt) {
  return prompt == PromptTemplate::ZeroShot ? embedded::k_zero_shot_prompt
                                            : embedded::k_few_shot_prompt;
}

std::string render_prompt(PromptTemplate prompt, std::string_view input_text) {
  std::string text(prompt_text(prompt));
  if (auto pos = text.find(kPlaceholder); pos != std::string::npos) {
    text.replace(pos, kPlaceholder.size(), input_text);
  }
  return text;
}

void ProviderConfig::validate() const {
  if (max_parallel < 1) throw ConfigError("max_parallel must be at least 1");
  if (mode != ProviderMode::RuleBased && endpoint_or_command.empty()) {
    throw ConfigError("external provider needs an endpoint or command");
  }
  if (timeout.count() <= 0) throw ConfigError("timeout must be positive");
}

Disambiguation disambiguate(std::span<const Token> tokens, std::size_t index,
                            const AgreementRules& rules) {
  const std::string form = pronoun_of(tokens[index]).value_or(tokens[index].lower);
  const std::size_t j = skip_adverbs(tokens, index + 1, rules);
  const Token* next = j < tokens.size() ? &tokens[j] : nullptr;
  const bool boundary = next == nullptr || next->kind == TokenKind::Punctuation;

  if (form == "his") {
    if (boundary) return {PronounCategory::PossessivePronoun, Confidence::LexicalCertain};
    const std::string& word = next->lower;
    if (rules.is_preposition(word) || rules.is_conjunction(word) ||
        rules.is_irregular_form(word)) {
      return {PronounCategory::PossessivePronoun, Confidence::Heuristic};
    }
    return {PronounCategory::PossessiveDeterminer, Confidence::Heuristic};
  }

  // "her"
  if (boundary || pronoun_of(*next)) {
    return {PronounCategory::Object, Confidence::LexicalCertain};
  }
  const std::string& word = next->lower;
  if (rules.is_function_word(word) || rules.is_preposition(word) || rules.is_conjunction(word)) {
    return {PronounCategory::Object, Confidence::LexicalCertain};
  }
  if (index > 0 && rules.is_causative(tokens[index - 1].lower) && rules.is_base_verb(word)) {
    return {PronounCategory::Object, Confidence::Heuristic};
  }
  return {PronounCategory::PossessiveDeterminer, Confidence::Heuristic};
}

NeutralRewrite neutralize(std::string_view text, const ProviderConfig& config) {
  std::vector<std::string> one{std::string(text)};
  return std::move(neutralize_batch(one, config).front());
}

std::vector<NeutralRewrite> neutralize_batch(std::span<const std::string> texts,
                                             const ProviderConfig& config) {
  config.validate();
  std::vector<NeutralRewrite> rewrites;
  rewrites.reserve(texts.size());
  if (config.mode == ProviderMode::RuleBased) {
    const AgreementRules& rules = config.rules ? *config.rules : AgreementRules::builtin();
    for (const std::string& text : texts) rewrites.push_back(neutralize_rule_based(text, rules));
    return rewrites;
  }
  std::vector<std::string> replies = config.mode == ProviderMode::ExternalSubprocess
                                         ? provider::run_subprocess(texts, config)
                                         : provider::run_http(texts, config);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    rewrites.push_back(from_reply(texts[i], std::move(replies[i])));
  }
  return rewrites;
}

}  // namespace gatex
