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

#include "gatex/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gatex/errors.h"
#include "gatex/text.h"
#include "json.hpp"

namespace gatex {
namespace {

using ordered_json = nlohmann::ordered_json;

struct LabelName {
  Label label;
  std::string_view name;
  bool positive;
};

constexpr std::array<LabelName, 9> kLabelNames = {{
    {Label::TargetOnlyGenderedNoun, "target_only_gendered_noun", true},
    {Label::TargetOnlyGenderedPronoun, "target_only_gendered_pronoun", true},
    {Label::TargetOnlyGenderedNounPronoun, "target_only_gendered_noun+pronoun", true},
    {Label::SourceTargetGenderedNoun, "source+target_gendered_noun", false},
    {Label::SourceTargetGenderedNounPronoun, "source+target_gendered_noun+pronoun", false},
    {Label::SourceGenderedNounTargetPronoun, "source_gendered_noun_target_pronoun", false},
    {Label::Mixed, "mixed", false},
    {Label::Name, "name", true},
    {Label::NonAgmeName, "non-AGME-name", false},
}};

std::string underscored(std::string_view name) {
  std::string out = to_lower(name);
  std::replace(out.begin(), out.end(), '+', '_');
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

[[noreturn]] void schema_fail(std::size_t line, std::string_view id, const std::string& message) {
  std::string where = line > 0 ? "line " + std::to_string(line) : std::string("record");
  if (!id.empty()) where += " (" + std::string(id) + ")";
  throw SchemaError(where + ": " + message);
}

bool is_gender_key(std::string_view key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return c == 'F' || c == 'M' || c == 'N';
  });
}

// "FF" -> "F"; other keys unchanged.
std::string normalize_key(std::string_view key) {
  if (key.size() > 1 && std::all_of(key.begin(), key.end(), [&](char c) { return c == key[0]; })) {
    return std::string(1, key[0]);
  }
  return std::string(key);
}

ClusterAnnotation parse_clusters(const nlohmann::json& value) {
  ClusterAnnotation annotation;
  for (const auto& cluster : value) {
    std::vector<std::size_t> mentions;
    for (const auto& index : cluster) mentions.push_back(index.get<std::size_t>());
    annotation.clusters.push_back(std::move(mentions));
  }
  return annotation;
}

std::string string_field(const nlohmann::json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end() || !it->is_string()) {
    throw SchemaError(std::string("missing or non-string field \"") + name + "\"");
  }
  return it->get<std::string>();
}

std::size_t word_count(std::string_view text) { return split_words(text).size(); }

}  // namespace

std::string_view to_string(Label label) {
  return kLabelNames[static_cast<std::size_t>(label)].name;
}

std::optional<Label> parse_label(std::string_view name) {
  const std::string folded = underscored(trim(name));
  if (folded == "source_gendered_pronoun_target_noun") {
    return Label::SourceGenderedNounTargetPronoun;
  }
  for (const auto& entry : kLabelNames) {
    if (underscored(entry.name) == folded) return entry.label;
  }
  return std::nullopt;
}

bool is_positive(Label label) { return kLabelNames[static_cast<std::size_t>(label)].positive; }

std::optional<int> parse_agme_label(std::string_view name) {
  const std::string folded = underscored(trim(name));
  std::size_t digits = 0;
  while (digits < folded.size() && std::isdigit(static_cast<unsigned char>(folded[digits]))) {
    ++digits;
  }
  if (digits == 0 || digits > 6) return std::nullopt;
  std::string_view rest = std::string_view(folded).substr(digits);
  if (!rest.empty() && (rest.front() == '_' || rest.front() == ' ')) rest.remove_prefix(1);
  if (rest != "agme" && rest != "agmes") return std::nullopt;
  return std::stoi(folded.substr(0, digits));
}

RewriteInstance parse_record(std::string_view line, std::size_t line_number,
                             const LoadOptions& options) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    schema_fail(line_number, "", std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) schema_fail(line_number, "", "record is not an object");

  RewriteInstance instance;
  if (auto it = j.find("id"); it != j.end()) {
    if (it->is_string()) {
      instance.id = it->get<std::string>();
    } else if (it->is_number_integer()) {
      instance.id = std::to_string(it->get<long long>());
    } else {
      schema_fail(line_number, "", "field \"id\" must be a string or integer");
    }
  } else {
    instance.id = std::to_string(line_number);
  }
  const std::string& id = instance.id;

  try {
    instance.source = string_field(j, "source");
    instance.source_lang = string_field(j, "source_lang");

    std::optional<int> agme_from_labels;
    const auto labels = j.find("labels");
    if (labels == j.end() || !labels->is_array()) {
      schema_fail(line_number, id, "missing label list");
    }
    for (const auto& value : *labels) {
      if (!value.is_string()) schema_fail(line_number, id, "labels must be strings");
      const std::string name = value.get<std::string>();
      if (auto label = parse_label(name)) {
        instance.labels.insert(*label);
      } else if (auto count = parse_agme_label(name)) {
        if (agme_from_labels && *agme_from_labels != *count) {
          schema_fail(line_number, id, "conflicting AGME labels");
        }
        agme_from_labels = count;
      } else {
        schema_fail(line_number, id, "unknown label \"" + name + "\"");
      }
    }

    std::optional<int> agme_field;
    if (auto it = j.find("agme_count"); it != j.end()) {
      if (!it->is_number_integer()) schema_fail(line_number, id, "agme_count must be an integer");
      agme_field = it->get<int>();
    }
    if (agme_field && agme_from_labels && *agme_field != *agme_from_labels) {
      schema_fail(line_number, id, "agme_count disagrees with the AGME label");
    }
    if (!agme_field && !agme_from_labels) schema_fail(line_number, id, "no AGME count");
    instance.agme_count = agme_field ? *agme_field : *agme_from_labels;
    if (instance.agme_count < 0) schema_fail(line_number, id, "negative agme_count");

    const bool has_positive = std::any_of(instance.labels.begin(), instance.labels.end(),
                                          [](Label l) { return is_positive(l); });
    if ((instance.agme_count == 0) == has_positive) {
      schema_fail(line_number, id,
                  has_positive ? "positive label on a 0-AGME instance"
                               : "AGMEs present but no positive label");
    }

    const auto variants = j.find("variants");
    if (variants == j.end() || !variants->is_object() || variants->empty()) {
      schema_fail(line_number, id, "missing variants");
    }
    const std::size_t arity = static_cast<std::size_t>(std::max(instance.agme_count, 1));
    for (const auto& [raw_key, text] : variants->items()) {
      if (!text.is_string()) schema_fail(line_number, id, "variant text must be a string");
      std::string key;
      if (raw_key == "0") {
        if (instance.agme_count != 0) {
          schema_fail(line_number, id, "key \"0\" is only valid for 0-AGME instances");
        }
        key = raw_key;
      } else {
        if (!is_gender_key(raw_key) || (raw_key.size() != 1 && raw_key.size() != arity)) {
          schema_fail(line_number, id, "bad variant key \"" + raw_key + "\"");
        }
        key = normalize_key(raw_key);
      }
      if (!instance.variants.emplace(key, text.get<std::string>()).second) {
        schema_fail(line_number, id, "duplicate variant key \"" + key + "\"");
      }
    }
    if (instance.agme_count >= 1 &&
        (!instance.variants.contains("F") || !instance.variants.contains("M"))) {
      schema_fail(line_number, id, "F and M variants are required");
    }

    if (auto it = j.find("clusters"); it != j.end() && !it->is_null()) {
      if (!it->is_object()) schema_fail(line_number, id, "clusters must be an object");
      for (const auto& [raw_key, value] : it->items()) {
        const std::string key = raw_key == "0" ? raw_key : normalize_key(raw_key);
        if (!instance.variants.contains(key)) {
          schema_fail(line_number, id, "clusters for unknown variant \"" + raw_key + "\"");
        }
        instance.clusters.emplace(key, parse_clusters(value));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    schema_fail(line_number, id, e.what());
  } catch (const SchemaError& e) {
    const std::string message = e.what();
    if (message.rfind("line ", 0) == 0 || message.rfind("record", 0) == 0) throw;
    schema_fail(line_number, id, message);
  }

  if (options.check_consistency && instance.variants.size() > 1) {
    const GenderLexicon& lexicon = options.lexicon ? *options.lexicon : GenderLexicon::builtin();
    const ConsistencyReport report = validate_consistency(instance.variants, lexicon);
    if (!report.consistent()) {
      const InconsistentSpan& span = report.spans.front();
      schema_fail(line_number, id,
                  "variants " + span.base_key + " and " + span.other_key +
                      " differ outside gendered words: \"" + span.base_text + "\" vs \"" +
                      span.other_text + "\"");
    }
  }
  return instance;
}

LoadResult load_stream(std::istream& in, const LoadOptions& options) {
  LoadResult result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    try {
      result.instances.push_back(parse_record(line, line_number, options));
    } catch (const SchemaError& e) {
      std::string id;
      try {
        const auto j = nlohmann::json::parse(line);
        if (j.is_object() && j.contains("id") && j["id"].is_string()) id = j["id"];
      } catch (const nlohmann::json::exception&) {
      }
      result.issues.push_back({line_number, id, e.what()});
    }
  }
  if (in.bad()) throw IoError("read failure");
  return result;
}

LoadResult load(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus " + path.string());
  return load_stream(in, options);
}

std::string to_record(const RewriteInstance& instance) {
  ordered_json j;
  j["id"] = instance.id;
  j["source"] = instance.source;
  j["source_lang"] = instance.source_lang;
  ordered_json variants = ordered_json::object();
  for (const auto& [key, text] : instance.variants) variants[key] = text;
  j["variants"] = std::move(variants);
  ordered_json labels = ordered_json::array();
  for (Label label : instance.labels) labels.push_back(std::string(to_string(label)));
  j["labels"] = std::move(labels);
  j["agme_count"] = instance.agme_count;
  if (!instance.clusters.empty()) {
    ordered_json clusters = ordered_json::object();
    for (const auto& [key, annotation] : instance.clusters) clusters[key] = annotation.clusters;
    j["clusters"] = std::move(clusters);
  }
  return j.dump();
}

void save_stream(std::ostream& out, std::span<const RewriteInstance> instances) {
  for (const RewriteInstance& instance : instances) out << to_record(instance) << '\n';
  if (!out) throw IoError("write failure");
}

void save(const std::filesystem::path& path, std::span<const RewriteInstance> instances) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  save_stream(out, instances);
}

PrepResult prepare_pronoun_only(std::span<const RewriteInstance> instances,
                                const PrepOptions& options) {
  PrepResult result;
  for (const RewriteInstance& instance : instances) {
    const bool noun_label = std::any_of(
        instance.labels.begin(), instance.labels.end(),
        [](Label l) { return to_string(l).find("gendered_noun") != std::string_view::npos; });
    if (noun_label || instance.agme_count >= 3) continue;
    if (options.scorer &&
        options.scorer(instance.source, instance.source_lang) < options.min_language_score) {
      continue;
    }
    result.kept.push_back(instance);
    if (instance.agme_count == 0) continue;

    const std::size_t arity = static_cast<std::size_t>(instance.agme_count);
    auto add = [&](const std::string& from, const std::string& to) {
      const auto input = instance.variants.find(from);
      const auto expected = instance.variants.find(to);
      if (input == instance.variants.end() || expected == instance.variants.end()) return;
      result.scenarios.push_back({instance.id, from, to, GenderAssignment::from_key(to, arity),
                                  input->second, expected->second});
    };
    add("F", "N");
    add("F", "M");
    add("M", "N");
    add("M", "F");
    for (const auto& [key, text] : instance.variants) {
      if (key.size() < 2 || key.find('N') != std::string::npos) continue;
      add(key, "F");
      add(key, "M");
      add(key, "N");
    }
  }
  return result;
}

std::string to_record(const RewriteScenario& scenario) {
  ordered_json j;
  j["instance_id"] = scenario.instance_id;
  j["input_key"] = scenario.input_key;
  j["expected_key"] = scenario.expected_key;
  std::string target;
  for (Gender g : scenario.target.per_cluster()) target += gender_code(g);
  j["target"] = target;
  j["input"] = scenario.input_text;
  j["expected"] = scenario.expected_text;
  return j.dump();
}

RewriteScenario parse_scenario(std::string_view line, std::size_t line_number) {
  try {
    const auto j = nlohmann::json::parse(line);
    const std::string target = string_field(j, "target");
    if (!is_gender_key(target)) throw SchemaError("bad target \"" + target + "\"");
    return {string_field(j, "instance_id"), string_field(j, "input_key"),
            string_field(j, "expected_key"), GenderAssignment::from_key(target),
            string_field(j, "input"),       string_field(j, "expected")};
  } catch (const nlohmann::json::exception& e) {
    schema_fail(line_number, "", e.what());
  } catch (const SchemaError& e) {
    schema_fail(line_number, "", e.what());
  }
}

std::vector<RewriteScenario> load_scenarios(std::istream& in) {
  std::vector<RewriteScenario> scenarios;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!trim(line).empty()) scenarios.push_back(parse_scenario(line, line_number));
  }
  return scenarios;
}

void save_scenarios(std::ostream& out, std::span<const RewriteScenario> scenarios) {
  for (const RewriteScenario& scenario : scenarios) out << to_record(scenario) << '\n';
  if (!out) throw IoError("write failure");
}

LengthSummary summarize_lengths(std::vector<std::size_t> lengths) {
  LengthSummary summary;
  summary.count = lengths.size();
  if (lengths.empty()) return summary;
  std::sort(lengths.begin(), lengths.end());
  auto quantile = [&](double q) {
    const double position = q * static_cast<double>(lengths.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(position));
    const std::size_t hi = std::min(lo + 1, lengths.size() - 1);
    const double fraction = position - static_cast<double>(lo);
    return static_cast<double>(lengths[lo]) +
           fraction * (static_cast<double>(lengths[hi]) - static_cast<double>(lengths[lo]));
  };
  summary.min = static_cast<double>(lengths.front());
  summary.q1 = quantile(0.25);
  summary.median = quantile(0.5);
  summary.q3 = quantile(0.75);
  summary.max = static_cast<double>(lengths.back());
  return summary;
}

CorpusStats stats(std::span<const RewriteInstance> instances) {
  CorpusStats result;
  for (Label label : kAllLabels) result.label_counts[label] = 0;
  for (int n = 0; n <= 3; ++n) result.agme_counts[n] = 0;
  std::vector<std::size_t> source_lengths;
  std::vector<std::size_t> target_lengths;
  for (const RewriteInstance& instance : instances) {
    ++result.total;
    for (Label label : instance.labels) ++result.label_counts[label];
    ++result.agme_counts[instance.agme_count];
    source_lengths.push_back(word_count(instance.source));
    if (!instance.variants.empty()) {
      auto it = instance.variants.find("F");
      if (it == instance.variants.end()) it = instance.variants.begin();
      target_lengths.push_back(word_count(it->second));
    }
  }
  result.source_lengths = summarize_lengths(std::move(source_lengths));
  result.target_lengths = summarize_lengths(std::move(target_lengths));
  return result;
}

std::string format_stats(const CorpusStats& s) {
  std::ostringstream out;
  char line[160];
  auto row = [&](const std::string& name, std::size_t count) {
    std::snprintf(line, sizeof line, "%-40s %8zu\n", name.c_str(), count);
    out << line;
  };
  row("total instance count", s.total);
  for (Label label : kAllLabels) {
    if (label == Label::Mixed) break;
    row(std::string(to_string(label)), s.label_counts.at(label));
  }
  for (const auto& [n, count] : s.agme_counts) {
    row(std::to_string(n) + (n == 1 ? " AGME" : " AGMEs"), count);
  }
  row(std::string(to_string(Label::Mixed)), s.label_counts.at(Label::Mixed));
  row(std::string(to_string(Label::Name)), s.label_counts.at(Label::Name));
  row(std::string(to_string(Label::NonAgmeName)), s.label_counts.at(Label::NonAgmeName));
  auto lengths = [&](const char* side, const LengthSummary& l) {
    std::snprintf(line, sizeof line,
                  "%-6s length  n=%zu min=%.1f q1=%.2f median=%.2f q3=%.2f max=%.1f\n", side,
                  l.count, l.min, l.q1, l.median, l.q3, l.max);
    out << line;
  };
  lengths("source", s.source_lengths);
  lengths("target", s.target_lengths);
  return out.str();
}

}  // namespace gatex
