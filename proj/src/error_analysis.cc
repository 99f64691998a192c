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

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "gatex/errors.h"
#include "gatex/evaluator.h"
#include "gatex/text.h"
#include "json.hpp"

namespace gatex {
namespace {

struct LabelNames {
  ErrorLabel label;
  std::string_view machine;
  std::string_view display;
};

constexpr std::array<LabelNames, 7> kLabelNames = {{
    {ErrorLabel::Comma, "comma", "Comma"},
    {ErrorLabel::OtherCorrections, "other_corrections", "Other corrections"},
    {ErrorLabel::POS, "pos", "POS"},
    {ErrorLabel::SVA, "sva", "SVA"},
    {ErrorLabel::ThemToThemselves, "them_to_themselves", "Them -> Themselves"},
    {ErrorLabel::NoneResponse, "none_response", "'None' response"},
    {ErrorLabel::OtherModifications, "other_modifications", "Other modifications"},
}};

// Personal pronouns outside the gendered table; a change touching one of
// these is never an unrelated correction.
constexpr std::array<std::string_view, 13> kOtherPronouns = {
    "i", "me", "my", "mine", "you", "your", "yours", "we", "us", "our", "ours", "it", "its"};

std::vector<std::string> surfaces(std::string_view text) {
  std::vector<std::string> out;
  for (Token& token : tokenize(text)) {
    if (!token.surface.empty()) out.push_back(std::move(token.surface));
  }
  return out;
}

std::string join(std::span<const std::string> words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::optional<std::string> pronoun_form(std::string_view surface) {
  const std::vector<Token> tokens = tokenize(surface);
  if (tokens.size() != 1) return std::nullopt;
  return pronoun_of(tokens.front());
}

bool is_they_form(std::string_view surface) {
  auto form = pronoun_form(surface);
  return form && gender_of(*form) == Gender::Neutral;
}

bool touches_pronoun(std::span<const std::string> words) {
  for (const std::string& w : words) {
    if (pronoun_form(w)) return true;
    const std::string lower = to_lower(w);
    if (std::find(kOtherPronouns.begin(), kOtherPronouns.end(), lower) != kOtherPronouns.end()) {
      return true;
    }
  }
  return false;
}

bool contains_run(std::span<const std::string> haystack, std::span<const std::string> needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

std::string_view to_string(ErrorLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)].machine;
}

std::string_view display_name(ErrorLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)].display;
}

std::optional<ErrorLabel> parse_error_label(std::string_view name) {
  for (const auto& entry : kLabelNames) {
    if (entry.machine == name || entry.display == name) return entry.label;
  }
  return std::nullopt;
}

std::set<ErrorLabel> classify_error(std::string_view input, std::string_view hypothesis,
                                    std::string_view reference, const AgreementRules& rules) {
  {
    std::string folded = to_lower(trim(hypothesis));
    if (!folded.empty() && folded.back() == '.') folded.pop_back();
    if (folded == "none") return {ErrorLabel::NoneResponse};
  }
  if (trim(hypothesis) == trim(reference)) return {};

  const std::vector<std::string> hyp = surfaces(hypothesis);
  const std::vector<std::string> ref = surfaces(reference);
  const std::vector<std::string> src = surfaces(input);
  const std::span<const std::string> hyp_view(hyp);
  const std::span<const std::string> ref_view(ref);

  std::set<ErrorLabel> labels;
  for (const DiffSpan& span : diff_sequences(hyp, ref)) {
    const auto h = hyp_view.subspan(span.a_begin, span.a_end - span.a_begin);
    const auto r = ref_view.subspan(span.b_begin, span.b_end - span.b_begin);

    auto is_comma = [](const std::string& w) { return w == ","; };
    if (std::all_of(h.begin(), h.end(), is_comma) && std::all_of(r.begin(), r.end(), is_comma)) {
      labels.insert(ErrorLabel::Comma);
      continue;
    }

    if (h.size() == r.size()) {
      std::set<ErrorLabel> pair_labels;
      bool all_explained = true;
      for (std::size_t k = 0; k < h.size(); ++k) {
        const std::string hl = to_lower(h[k]);
        const std::string rl = to_lower(r[k]);
        if (hl == "themselves" && rl == "them") {
          pair_labels.insert(ErrorLabel::ThemToThemselves);
        } else if (rules.is_agreement_pair(hl, rl)) {
          pair_labels.insert(ErrorLabel::SVA);
        } else if (is_they_form(h[k]) && is_they_form(r[k])) {
          pair_labels.insert(ErrorLabel::POS);
        } else {
          all_explained = false;
        }
      }
      if (all_explained) {
        labels.insert(pair_labels.begin(), pair_labels.end());
        continue;
      }
    }

    if (!h.empty() && !r.empty() && !touches_pronoun(h) && !touches_pronoun(r) &&
        contains_run(src, r)) {
      labels.insert(ErrorLabel::OtherCorrections);
    } else {
      labels.insert(ErrorLabel::OtherModifications);
    }
  }
  if (labels.empty()) labels.insert(ErrorLabel::OtherModifications);
  return labels;
}

GenderLexicon GenderLexicon::from(const WordList& words, const AgreementRules& rules) {
  GenderLexicon lexicon;
  lexicon.rules = &rules;
  lexicon.nouns = words.nouns;
  lexicon.nouns.insert(words.neutral_nouns.begin(), words.neutral_nouns.end());
  return lexicon;
}

const GenderLexicon& GenderLexicon::builtin() {
  static const GenderLexicon lexicon = from(WordList::builtin());
  return lexicon;
}

bool GenderLexicon::is_gender_word(std::string_view surface) const {
  if (pronoun_form(surface)) return true;
  const std::string lower = to_lower(surface);
  return nouns.contains(lower) || rules->is_irregular_form(lower);
}

bool GenderLexicon::related_pair(std::string_view a, std::string_view b) const {
  if (is_gender_word(a) && is_gender_word(b)) return true;
  return rules->is_agreement_pair(to_lower(a), to_lower(b));
}

ConsistencyReport validate_consistency(const std::map<std::string, std::string>& variants,
                                       const GenderLexicon& lexicon) {
  ConsistencyReport report;
  if (variants.size() < 2) {
    report.diagnostic = "EmptyInput: consistency needs at least two variants, got " +
                        std::to_string(variants.size());
    return report;
  }
  const auto& [base_key, base_text] = *variants.begin();
  const std::vector<std::string> base = surfaces(base_text);
  const std::span<const std::string> base_view(base);
  for (auto it = std::next(variants.begin()); it != variants.end(); ++it) {
    const std::vector<std::string> other = surfaces(it->second);
    const std::span<const std::string> other_view(other);
    for (const DiffSpan& span : diff_sequences(base, other)) {
      const auto a = base_view.subspan(span.a_begin, span.a_end - span.a_begin);
      const auto b = other_view.subspan(span.b_begin, span.b_end - span.b_begin);
      bool related = false;
      if (a.size() == b.size()) {
        related = true;
        for (std::size_t k = 0; k < a.size(); ++k) {
          related = related && lexicon.related_pair(a[k], b[k]);
        }
      }
      if (!related) {
        auto gender_word = [&](const std::string& w) { return lexicon.is_gender_word(w); };
        related = std::all_of(a.begin(), a.end(), gender_word) &&
                  std::all_of(b.begin(), b.end(), gender_word);
      }
      if (!related) report.spans.push_back({base_key, it->first, join(a), join(b)});
    }
  }
  return report;
}

EvalReport evaluate(std::span<const EvalItem> items, const BleuOptions& options) {
  EvalReport report;
  report.n_instances = items.size();
  for (ErrorLabel label : kAllErrorLabels) report.per_error_counts[label] = 0;
  if (items.empty()) {
    report.accuracy_percent = 100.0;
    report.bleu = 100.0;
    return report;
  }
  BleuStats bleu_stats(options.max_order);
  WerStats wer_stats;
  std::size_t exact = 0;
  for (const EvalItem& item : items) {
    bleu_stats.add(item.hypothesis, item.reference);
    wer_stats.add(item.hypothesis, item.reference);
    if (trim(item.hypothesis) == trim(item.reference)) {
      ++exact;
      continue;
    }
    for (ErrorLabel label : classify_error(item.input, item.hypothesis, item.reference)) {
      ++report.per_error_counts[label];
    }
  }
  report.accuracy_percent = 100.0 * static_cast<double>(exact) / static_cast<double>(items.size());
  report.bleu = bleu_stats.score(options.smoothing);
  report.wer_percent = wer_stats.percent();
  return report;
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["n_instances"] = report.n_instances;
  j["accuracy_percent"] = report.accuracy_percent;
  j["bleu"] = report.bleu;
  j["wer_percent"] = report.wer_percent;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (ErrorLabel label : kAllErrorLabels) {
    auto it = report.per_error_counts.find(label);
    counts[std::string(to_string(label))] = it == report.per_error_counts.end() ? 0 : it->second;
  }
  j["per_error_counts"] = std::move(counts);
  return j.dump();
}

EvalReport report_from_json(std::string_view json) {
  EvalReport report;
  try {
    const auto j = nlohmann::json::parse(json);
    report.n_instances = j.at("n_instances").get<std::size_t>();
    report.accuracy_percent = j.at("accuracy_percent").get<double>();
    report.bleu = j.at("bleu").get<double>();
    report.wer_percent = j.at("wer_percent").get<double>();
    for (const auto& [name, count] : j.at("per_error_counts").items()) {
      auto label = parse_error_label(name);
      if (!label) throw SchemaError("unknown error label \"" + name + "\"");
      report.per_error_counts[*label] = count.get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad report: ") + e.what());
  }
  return report;
}

std::string format_report_table(const EvalReport& report) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%-22s %10zu\n", "instances", report.n_instances);
  out << line;
  std::snprintf(line, sizeof line, "%-22s %10.2f\n", "accuracy (%)", report.accuracy_percent);
  out << line;
  std::snprintf(line, sizeof line, "%-22s %10.2f\n", "BLEU", report.bleu);
  out << line;
  std::snprintf(line, sizeof line, "%-22s %10.2f\n", "WER (%)", report.wer_percent);
  out << line;
  out << "errors\n";
  for (ErrorLabel label : kAllErrorLabels) {
    auto it = report.per_error_counts.find(label);
    const std::size_t count = it == report.per_error_counts.end() ? 0 : it->second;
    std::snprintf(line, sizeof line, "  %-20s %10zu\n", std::string(display_name(label)).c_str(),
                  count);
    out << line;
  }
  return out.str();
}

}  // namespace gatex
