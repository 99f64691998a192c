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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gatex/pronouns.h"
#include "gatex/word_list.h"

namespace gatex {

// Error taxonomy for neutral rewrites. Declaration order is the order in
// which reports list them.
enum class ErrorLabel {
  Comma,
  OtherCorrections,
  POS,
  SVA,
  ThemToThemselves,
  NoneResponse,
  OtherModifications,
};

inline constexpr std::array<ErrorLabel, 7> kAllErrorLabels = {
    ErrorLabel::Comma,         ErrorLabel::OtherCorrections, ErrorLabel::POS,
    ErrorLabel::SVA,           ErrorLabel::ThemToThemselves, ErrorLabel::NoneResponse,
    ErrorLabel::OtherModifications};

// Machine name ("them_to_themselves") and table name ("Them -> Themselves").
std::string_view to_string(ErrorLabel label);
std::string_view display_name(ErrorLabel label);
std::optional<ErrorLabel> parse_error_label(std::string_view name);

// Percentage of pairs equal after trimming outer whitespace. Throws
// LengthMismatch. An empty corpus scores 100.
double accuracy(std::span<const std::string> hypotheses, std::span<const std::string> references);

enum class BleuSmoothing { None, AddOne, Exp };

struct BleuOptions {
  int max_order = 4;
  BleuSmoothing smoothing = BleuSmoothing::None;
};

// Sufficient statistics for corpus BLEU over whitespace-split words. Shards
// may be accumulated separately and merged with +=.
struct BleuStats {
  std::vector<std::size_t> matches;
  std::vector<std::size_t> totals;
  std::size_t hypothesis_length = 0;
  std::size_t reference_length = 0;

  explicit BleuStats(int max_order = 4);
  void add(std::string_view hypothesis, std::string_view reference);
  BleuStats& operator+=(const BleuStats& other);
  // Orders with no hypothesis n-grams are left out of the geometric mean.
  double score(BleuSmoothing smoothing = BleuSmoothing::None) const;
};

// Corpus BLEU in [0, 100]. Throws LengthMismatch or EmptyCorpus.
double bleu(std::span<const std::string> hypotheses, std::span<const std::string> references,
            const BleuOptions& options = {});

std::size_t word_edit_distance(std::span<const std::string> hypothesis,
                               std::span<const std::string> reference);

struct WerStats {
  std::size_t edits = 0;
  std::size_t reference_words = 0;

  void add(std::string_view hypothesis, std::string_view reference);
  WerStats& operator+=(const WerStats& other);
  double percent() const;
};

// 100 * total word edits / total reference words. Throws LengthMismatch, or
// EmptyReference when there are no reference words but some hypothesis words.
double wer(std::span<const std::string> hypotheses, std::span<const std::string> references);

// A region where two token sequences differ: [a_begin, a_end) against
// [b_begin, b_end). Either side may be empty.
struct DiffSpan {
  std::size_t a_begin = 0;
  std::size_t a_end = 0;
  std::size_t b_begin = 0;
  std::size_t b_end = 0;

  bool operator==(const DiffSpan&) const = default;
};

// Minimum-edit alignment of two sequences, reported as maximal runs of
// non-matching positions.
std::vector<DiffSpan> diff_sequences(std::span<const std::string> a,
                                     std::span<const std::string> b);

// Labels a mismatching hypothesis. Always returns at least one label.
std::set<ErrorLabel> classify_error(std::string_view input, std::string_view hypothesis,
                                    std::string_view reference,
                                    const AgreementRules& rules = AgreementRules::builtin());

// Words whose change between variants counts as gender-related.
struct GenderLexicon {
  const AgreementRules* rules = &AgreementRules::builtin();
  std::set<std::string, std::less<>> nouns;  // gendered and neutral nouns

  static GenderLexicon from(const WordList& words,
                            const AgreementRules& rules = AgreementRules::builtin());
  static const GenderLexicon& builtin();

  bool is_gender_word(std::string_view surface) const;
  // Both sides gender words, or a verb agreement pair, or a contraction pair
  // such as "she's"/"they're".
  bool related_pair(std::string_view a, std::string_view b) const;
};

struct InconsistentSpan {
  std::string base_key;
  std::string other_key;
  std::string base_text;
  std::string other_text;

  bool operator==(const InconsistentSpan&) const = default;
};

struct ConsistencyReport {
  std::vector<InconsistentSpan> spans;
  std::optional<std::string> diagnostic;  // precondition problems

  bool consistent() const { return spans.empty() && !diagnostic; }
};

// Compares each variant with the first (by key order) and returns the diff
// regions that are not explained by gender. Fewer than two variants yields a
// diagnostic and no spans.
ConsistencyReport validate_consistency(const std::map<std::string, std::string>& variants,
                                       const GenderLexicon& lexicon = GenderLexicon::builtin());

struct EvalItem {
  std::string id;
  std::string input;
  std::string hypothesis;
  std::string reference;
};

struct EvalReport {
  double accuracy_percent = 0.0;
  double bleu = 0.0;
  double wer_percent = 0.0;
  std::size_t n_instances = 0;
  std::map<ErrorLabel, std::size_t> per_error_counts;
};

EvalReport evaluate(std::span<const EvalItem> items, const BleuOptions& options = {});

// One-line JSON record.
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(std::string_view json);
std::string format_report_table(const EvalReport& report);

}  // namespace gatex
