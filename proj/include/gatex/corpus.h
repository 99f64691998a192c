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
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gatex/engenderer.h"
#include "gatex/evaluator.h"

namespace gatex {

// Instance labels. Declaration order is the serialization order.
enum class Label {
  TargetOnlyGenderedNoun,
  TargetOnlyGenderedPronoun,
  TargetOnlyGenderedNounPronoun,
  SourceTargetGenderedNoun,
  SourceTargetGenderedNounPronoun,
  SourceGenderedNounTargetPronoun,
  Mixed,
  Name,
  NonAgmeName,
};

inline constexpr std::array<Label, 9> kAllLabels = {
    Label::TargetOnlyGenderedNoun,          Label::TargetOnlyGenderedPronoun,
    Label::TargetOnlyGenderedNounPronoun,   Label::SourceTargetGenderedNoun,
    Label::SourceTargetGenderedNounPronoun, Label::SourceGenderedNounTargetPronoun,
    Label::Mixed,                           Label::Name,
    Label::NonAgmeName};

// Serialized name, e.g. "source+target_gendered_noun+pronoun".
std::string_view to_string(Label label);

// Accepts the serialized names, their all-underscore spellings, and the
// alternate spelling "source_gendered_pronoun_target_noun".
std::optional<Label> parse_label(std::string_view name);

// Labels marking an ambiguously gendered person (an AGME).
bool is_positive(Label label);

// Parses "1-AGME", "2 AGMEs", "0_agme"...; nullopt for anything else.
std::optional<int> parse_agme_label(std::string_view name);

struct RewriteInstance {
  std::string id;
  std::string source;
  std::string source_lang;
  // Assignment key ("F", "M", "N", "FM", ... or "0" for negatives) -> text.
  std::map<std::string, std::string> variants;
  std::set<Label> labels;
  int agme_count = 0;
  std::map<std::string, ClusterAnnotation> clusters;  // keyed like variants

  bool operator==(const RewriteInstance&) const = default;
};

struct LoadOptions {
  bool check_consistency = true;
  const GenderLexicon* lexicon = nullptr;  // null: bundled lexicon
};

struct RecordIssue {
  std::size_t line = 0;  // 1-based
  std::string id;        // empty when the record has none
  std::string message;
};

struct LoadResult {
  std::vector<RewriteInstance> instances;
  std::vector<RecordIssue> issues;
};

// Parses and validates one record. Throws SchemaError.
RewriteInstance parse_record(std::string_view line, std::size_t line_number = 0,
                             const LoadOptions& options = {});

// Reads one record per line, skipping blank lines. Invalid records are
// reported in `issues`; valid ones are returned in file order.
LoadResult load_stream(std::istream& in, const LoadOptions& options = {});
// Throws IoError when the file cannot be read.
LoadResult load(const std::filesystem::path& path, const LoadOptions& options = {});

// Canonical one-line form: fixed field order, labels in declaration order.
std::string to_record(const RewriteInstance& instance);
void save_stream(std::ostream& out, std::span<const RewriteInstance> instances);
void save(const std::filesystem::path& path, std::span<const RewriteInstance> instances);

struct RewriteScenario {
  std::string instance_id;
  std::string input_key;
  std::string expected_key;
  GenderAssignment target;
  std::string input_text;
  std::string expected_text;

  bool operator==(const RewriteScenario&) const = default;
};

// Returns a score in [0, 1] for how well `text` matches `lang`.
using LanguageScorer = std::function<double(std::string_view text, std::string_view lang)>;

struct PrepOptions {
  LanguageScorer scorer;  // empty: every source passes
  double min_language_score = 0.7;
};

struct PrepResult {
  std::vector<RewriteInstance> kept;
  std::vector<RewriteScenario> scenarios;
};

// Keeps instances with no "gendered_noun" label and fewer than three AGMEs,
// then lists the rewrite scenarios for each: F->N, F->M, M->N, M->F, and for
// every mixed variant, rewrites into F, M and N. Scenarios whose expected
// variant is missing are skipped.
PrepResult prepare_pronoun_only(std::span<const RewriteInstance> instances,
                                const PrepOptions& options = {});

std::string to_record(const RewriteScenario& scenario);
RewriteScenario parse_scenario(std::string_view line, std::size_t line_number = 0);
std::vector<RewriteScenario> load_scenarios(std::istream& in);
void save_scenarios(std::ostream& out, std::span<const RewriteScenario> scenarios);

struct LengthSummary {
  std::size_t count = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;

  bool operator==(const LengthSummary&) const = default;
};

// Quartiles with linear interpolation between order statistics.
LengthSummary summarize_lengths(std::vector<std::size_t> lengths);

struct CorpusStats {
  std::size_t total = 0;
  std::map<Label, std::size_t> label_counts;  // every label, zeros included
  std::map<int, std::size_t> agme_counts;     // 0, 1, 2, 3 always present
  LengthSummary source_lengths;
  LengthSummary target_lengths;  // the F variant, or the first one
};

CorpusStats stats(std::span<const RewriteInstance> instances);
std::string format_stats(const CorpusStats& stats);

}  // namespace gatex
