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

#include <chrono>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gatex/pronouns.h"
#include "gatex/text.h"

namespace gatex {

enum class ProviderMode { RuleBased, ExternalSubprocess, ExternalHttp };
enum class PromptTemplate { ZeroShot, FewShot };

// Bundled prompt texts with an "{input_text}" placeholder.
std::string_view prompt_text(PromptTemplate prompt);
std::string render_prompt(PromptTemplate prompt, std::string_view input_text);

struct ProviderConfig {
  ProviderMode mode = ProviderMode::RuleBased;
  PromptTemplate prompt_template = PromptTemplate::ZeroShot;
  // Shell command (subprocess mode) or http://host:port/path (HTTP mode).
  std::string endpoint_or_command;
  // Longest wait for a single reply.
  std::chrono::milliseconds timeout{30000};
  int max_parallel = 1;
  const AgreementRules* rules = nullptr;  // null: bundled rules

  // Throws ConfigError on max_parallel < 1 or a missing endpoint.
  void validate() const;
};

struct TokenEdit {
  std::size_t index;
  std::string original;
  std::string replacement;

  bool operator==(const TokenEdit&) const = default;
};

enum class Provider { RuleBased, External };

struct NeutralRewrite {
  std::string text;
  std::vector<Token> tokens;
  // Substitutions relative to the input tokens, by increasing index. Empty
  // for external rewrites whose token count differs from the input.
  std::vector<TokenEdit> edits;
  Provider provider = Provider::RuleBased;
  // The provider answered "none": text is the input, unchanged.
  bool none_response = false;
  std::vector<std::string> diagnostics;
};

enum class Confidence { LexicalCertain, Heuristic };

struct Disambiguation {
  PronounCategory category;
  Confidence confidence;
};

// Category of an ambiguous "her" (Object or PossessiveDeterminer) or "his"
// (PossessiveDeterminer or PossessivePronoun), judged from its neighbours.
Disambiguation disambiguate(std::span<const Token> tokens, std::size_t index,
                            const AgreementRules& rules = AgreementRules::builtin());

// All-neutral rewrite of `text`. The rule-based provider never throws; the
// external providers throw ProviderTimeout or ProviderProtocolError.
NeutralRewrite neutralize(std::string_view text, const ProviderConfig& config = {});

// Batch form. Output i always belongs to input i; external providers keep
// at most config.max_parallel requests in flight.
std::vector<NeutralRewrite> neutralize_batch(std::span<const std::string> texts,
                                             const ProviderConfig& config = {});

namespace provider {

// Raw replies from an external provider, one per input, in input order.
std::vector<std::string> run_subprocess(std::span<const std::string> inputs,
                                        const ProviderConfig& config);
std::vector<std::string> run_http(std::span<const std::string> inputs,
                                  const ProviderConfig& config);

}  // namespace provider
}  // namespace gatex
