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

#include "gatex/engenderer.h"

#include <algorithm>

#include "gatex/errors.h"
#include "gatex/neutralizer.h"

namespace gatex {
namespace {

const AgreementRules& rules_of(const EngenderOptions& options) {
  return options.rules ? *options.rules : AgreementRules::builtin();
}

void reject_gendered_nouns(std::span<const Token> tokens, const EngenderOptions& options) {
  if (!options.gendered_nouns) return;
  for (const Token& token : tokens) {
    std::string word = token.lower;
    if (token.kind == TokenKind::Contraction) {
      if (auto parts = split_contraction(token.lower)) word = parts->host;
    }
    if (options.gendered_nouns->contains(word)) {
      throw InvalidInput("input contains the gendered noun \"" + token.surface +
                         "\" and is outside the pronoun-only class");
    }
  }
}

bool is_ambiguous_form(std::string_view form) { return form == "her" || form == "his"; }

class PronounRewriter {
 public:
  PronounRewriter(std::string_view original, std::string_view neutral,
                  const EngenderOptions& options)
      : alignment_(align_anchor(original, neutral)), rules_(rules_of(options)) {
    reject_gendered_nouns(alignment_.original_tokens, options);
    out_ = alignment_.original_tokens;
    if (!alignment_.aligned) {
      diagnostics_.push_back("AnchorMisaligned: anchor does not line up with the original");
    }
  }

  const std::vector<Token>& original() const { return alignment_.original_tokens; }

  // Category of the pronoun at `index`, consulting the anchor for her/his.
  PronounCategory category_at(std::size_t index) {
    const std::string form = *pronoun_of(original()[index]);
    if (!is_ambiguous_form(form)) return categories_of(form).front().category;
    if (index < alignment_.neutral_tokens.size() &&
        alignment_.original_tokens.size() == alignment_.neutral_tokens.size()) {
      if (auto anchor = pronoun_of(alignment_.neutral_tokens[index])) {
        for (const PronounCell& cell : categories_of(*anchor, Gender::Neutral)) {
          for (const PronounCell& own : categories_of(form)) {
            if (own.category == cell.category) return cell.category;
          }
        }
      }
    }
    low_confidence_ = true;
    diagnostics_.push_back("AnchorMisaligned: token " + std::to_string(index) +
                           " resolved by heuristic");
    return disambiguate(original(), index, rules_).category;
  }

  // Rewrites the pronoun at `index` into `gender`. Returns its category.
  PronounCategory rewrite(std::size_t index, Gender gender) {
    const Token& token = original()[index];
    const std::string form = *pronoun_of(token);
    const PronounCategory category = category_at(index);
    const std::string_view target = lookup(category, gender);
    if (target != form) {
      out_[index] = token.kind == TokenKind::Pronoun ? replace_token(token, target)
                                                     : replace_contraction_host(token, target);
      if (gender == Gender::Neutral && category == PronounCategory::Subject) {
        subjects_.push_back(index);
      }
    }
    return category;
  }

  EngenderResult finish() {
    for (std::size_t subject : subjects_) {
      VerbAdjustment adjusted = pluralize_verb(out_, subject, rules_);
      if (!adjusted.agreeing_verb_found) {
        diagnostics_.push_back("NoAgreeingVerbFound: token " + std::to_string(subject));
      }
      out_ = std::move(adjusted.tokens);
    }
    return {detokenize(out_), low_confidence_, std::move(diagnostics_)};
  }

 private:
  AnchorAlignment alignment_;
  const AgreementRules& rules_;
  std::vector<Token> out_;
  std::vector<std::size_t> subjects_;
  std::vector<std::string> diagnostics_;
  bool low_confidence_ = false;
};

bool is_gendered_token(const Token& token) {
  auto form = pronoun_of(token);
  return form && is_gendered_pronoun(*form);
}

}  // namespace

GenderAssignment::GenderAssignment(std::vector<Gender> per_cluster)
    : per_cluster_(std::move(per_cluster)) {
  if (per_cluster_.empty()) throw AssignmentArityMismatch("gender assignment cannot be empty");
}

GenderAssignment GenderAssignment::uniform(Gender gender, std::size_t clusters) {
  return GenderAssignment(std::vector<Gender>(std::max<std::size_t>(clusters, 1), gender));
}

GenderAssignment GenderAssignment::from_key(std::string_view key, std::size_t clusters) {
  std::vector<Gender> genders;
  for (char c : key) {
    auto gender = gender_from_code(c);
    if (!gender) throw InvalidInput("bad gender key \"" + std::string(key) + "\"");
    genders.push_back(*gender);
  }
  if (genders.size() == 1 && clusters > 1) genders.resize(clusters, genders.front());
  return GenderAssignment(std::move(genders));
}

bool GenderAssignment::uniform() const {
  return std::all_of(per_cluster_.begin(), per_cluster_.end(),
                     [&](Gender g) { return g == per_cluster_.front(); });
}

std::string GenderAssignment::key() const {
  if (uniform()) return std::string(1, gender_code(per_cluster_.front()));
  std::string key;
  for (Gender g : per_cluster_) key += gender_code(g);
  return key;
}

AnchorAlignment align_anchor(std::string_view original, std::string_view neutral) {
  AnchorAlignment alignment;
  alignment.original_tokens = tokenize(original);
  alignment.neutral_tokens = tokenize(neutral);
  if (alignment.original_tokens.size() != alignment.neutral_tokens.size()) return alignment;
  alignment.aligned = true;
  for (std::size_t i = 0; i < alignment.original_tokens.size(); ++i) {
    alignment.pairs.emplace_back(i, i);
    const Token& orig = alignment.original_tokens[i];
    if (!pronoun_of(orig)) continue;
    const Token& anchor = alignment.neutral_tokens[i];
    auto anchor_form = pronoun_of(anchor);
    const bool neutral_form = anchor_form && gender_of(*anchor_form) == Gender::Neutral;
    if (!neutral_form && anchor.lower != orig.lower) alignment.aligned = false;
  }
  if (!alignment.aligned) alignment.pairs.clear();
  return alignment;
}

EngenderResult engender_uniform(std::string_view original, std::string_view neutral,
                                Gender target, const EngenderOptions& options) {
  PronounRewriter rewriter(original, neutral, options);
  if (target == Gender::Neutral) return {std::string(neutral), false, {}};
  for (std::size_t i = 0; i < rewriter.original().size(); ++i) {
    if (is_gendered_token(rewriter.original()[i])) rewriter.rewrite(i, target);
  }
  return rewriter.finish();
}

EngenderResult engender_clusters(std::string_view original, std::string_view neutral,
                                 const ClusterAnnotation& clusters,
                                 const GenderAssignment& assignment,
                                 const EngenderOptions& options) {
  if (assignment.size() != clusters.clusters.size()) {
    throw AssignmentArityMismatch("assignment has " + std::to_string(assignment.size()) +
                                  " genders for " + std::to_string(clusters.clusters.size()) +
                                  " clusters");
  }
  PronounRewriter rewriter(original, neutral, options);
  const std::vector<Token>& tokens = rewriter.original();
  std::vector<bool> covered(tokens.size(), false);
  for (const auto& cluster : clusters.clusters) {
    for (std::size_t index : cluster) {
      if (index >= tokens.size() || !pronoun_of(tokens[index])) {
        throw InvalidCluster("cluster index " + std::to_string(index) +
                             " does not point at a pronoun");
      }
      if (covered[index]) {
        throw InvalidCluster("token " + std::to_string(index) + " is in two clusters");
      }
      covered[index] = true;
    }
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_gendered_token(tokens[i]) && !covered[i]) {
      throw UnclusteredPronoun("pronoun \"" + tokens[i].surface + "\" at token " +
                               std::to_string(i) + " belongs to no cluster");
    }
  }
  for (std::size_t c = 0; c < clusters.clusters.size(); ++c) {
    for (std::size_t index : clusters.clusters[c]) {
      if (is_gendered_token(tokens[index])) rewriter.rewrite(index, assignment.per_cluster()[c]);
    }
  }
  return rewriter.finish();
}

std::vector<Variant> enumerate_variants(std::string_view original, std::string_view neutral,
                                        const ClusterAnnotation& clusters,
                                        const EngenderOptions& options) {
  const std::size_t k = clusters.clusters.size();
  if (k == 0) {
    for (const Token& token : tokenize(original)) {
      if (is_gendered_token(token)) {
        throw UnclusteredPronoun("pronoun \"" + token.surface + "\" belongs to no cluster");
      }
    }
    return {Variant{std::nullopt, std::string(original)}};
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  std::vector<Variant> variants;
  variants.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Gender> genders(k);
    std::size_t rest = code;
    for (std::size_t c = k; c-- > 0;) {
      genders[c] = kAllGenders[rest % 3];
      rest /= 3;
    }
    GenderAssignment assignment(std::move(genders));
    std::string text = engender_clusters(original, neutral, clusters, assignment, options).text;
    variants.push_back({std::move(assignment), std::move(text)});
  }
  return variants;
}

}  // namespace gatex
