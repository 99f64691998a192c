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

#include <gtest/gtest.h>

#include <sstream>

#include "gatex/errors.h"

namespace gatex {
namespace {

const std::string kHerHelp =
    R"({"id":"help","source":"Yardımı için teşekkür ederim.","source_lang":"tr",)"
    R"("variants":{"F":"I am grateful for her help.","M":"I am grateful for his help.",)"
    R"("N":"I am grateful for their help."},"labels":["target_only_gendered_pronoun","1-AGME"]})";

const std::string kFather =
    R"({"id":"will","source":"Babası vasiyetinde evi ona bıraktı.","source_lang":"tr",)"
    R"("variants":{"F":"Her father left her the house in his will.",)"
    R"("M":"His father left him the house in his will.",)"
    R"("N":"Their father left them the house in his will."},)"
    R"("labels":["target_only_gendered_pronoun","source+target_gendered_noun+pronoun","1-AGME","mixed"]})";

RewriteInstance instance(const std::string& id, int agme, std::set<Label> labels,
                         std::map<std::string, std::string> variants,
                         std::string source = "kaynak cümle") {
  RewriteInstance out;
  out.id = id;
  out.source = std::move(source);
  out.source_lang = "tr";
  out.agme_count = agme;
  out.labels = std::move(labels);
  out.variants = std::move(variants);
  return out;
}

std::map<std::string, std::string> one_agme() {
  return {{"F", "She left."}, {"M", "He left."}, {"N", "They left."}};
}

TEST(Labels, NamesAndPolarity) {
  for (Label label : kAllLabels) EXPECT_EQ(parse_label(to_string(label)), label);
  EXPECT_EQ(parse_label("source_gendered_pronoun_target_noun"),
            Label::SourceGenderedNounTargetPronoun);
  EXPECT_EQ(parse_label("source+target_gendered_noun+pronoun"),
            Label::SourceTargetGenderedNounPronoun);
  EXPECT_FALSE(parse_label("unknown_label"));
  EXPECT_TRUE(is_positive(Label::TargetOnlyGenderedPronoun));
  EXPECT_TRUE(is_positive(Label::Name));
  EXPECT_FALSE(is_positive(Label::Mixed));
  EXPECT_FALSE(is_positive(Label::NonAgmeName));
  EXPECT_FALSE(is_positive(Label::SourceTargetGenderedNoun));
  EXPECT_EQ(parse_agme_label("1-AGME"), 1);
  EXPECT_EQ(parse_agme_label("2 AGMEs"), 2);
  EXPECT_EQ(parse_agme_label("0_agme"), 0);
  EXPECT_FALSE(parse_agme_label("AGME"));
}

TEST(ParseRecord, SingleAgme) {
  const RewriteInstance r = parse_record(kHerHelp);
  EXPECT_EQ(r.id, "help");
  EXPECT_EQ(r.source_lang, "tr");
  EXPECT_EQ(r.agme_count, 1);
  EXPECT_EQ(r.labels, std::set<Label>{Label::TargetOnlyGenderedPronoun});
  EXPECT_EQ(r.variants.at("N"), "I am grateful for their help.");
}

TEST(ParseRecord, MixedRecord) {
  const RewriteInstance r = parse_record(kFather);
  EXPECT_EQ(r.agme_count, 1);
  EXPECT_EQ(r.labels, (std::set<Label>{Label::TargetOnlyGenderedPronoun,
                                       Label::SourceTargetGenderedNounPronoun, Label::Mixed}));
  EXPECT_EQ(r.variants.size(), 3u);
}

TEST(ParseRecord, SchemaErrors) {
  auto without = [](std::string text, const std::string& field) {
    const auto pos = text.find(field);
    const auto end = text.find("\",", pos);
    text.erase(pos, end + 2 - pos);
    return text;
  };
  EXPECT_THROW(parse_record(without(kHerHelp, "\"M\":")), SchemaError);
  EXPECT_THROW(parse_record(without(kHerHelp, "\"source\":")), SchemaError);
  EXPECT_THROW(parse_record("{not json"), SchemaError);
  EXPECT_THROW(parse_record("[1, 2]"), SchemaError);
  // An AGME count with no positive label.
  EXPECT_THROW(parse_record(R"({"source":"x","source_lang":"tr","variants":{"F":"She left.","M":"He left."},"labels":["mixed","1-AGME"]})"),
               SchemaError);
  // Contradicting counts.
  EXPECT_THROW(parse_record(R"({"source":"x","source_lang":"tr","variants":{"F":"She left.","M":"He left."},"labels":["target_only_gendered_pronoun","1-AGME"],"agme_count":2})"),
               SchemaError);
  // Variants differing in more than gender.
  EXPECT_THROW(parse_record(R"({"source":"x","source_lang":"tr","variants":{"F":"She left early.","M":"He left late."},"labels":["target_only_gendered_pronoun","1-AGME"]})"),
               SchemaError);
  EXPECT_NO_THROW(parse_record(R"({"source":"x","source_lang":"tr","variants":{"F":"She left early.","M":"He left late."},"labels":["target_only_gendered_pronoun","1-AGME"]})",
                               0, LoadOptions{false}));
}

TEST(ParseRecord, NegativeRecordUsesZeroKey) {
  const RewriteInstance r = parse_record(
      R"({"id":"n","source":"x","source_lang":"fi","variants":{"0":"My mother left."},"labels":["source+target_gendered_noun"],"agme_count":0})");
  EXPECT_EQ(r.agme_count, 0);
  EXPECT_EQ(r.variants.begin()->first, "0");
}

TEST(ParseRecord, TwoAgmeKeysNormalize) {
  const RewriteInstance r = parse_record(
      R"({"id":"u","source":"x","source_lang":"tr","variants":{"FF":"She gave her her umbrella.","MM":"He gave him his umbrella.","N":"They gave them their umbrella.","FM":"She gave him her umbrella."},"labels":["target_only_gendered_pronoun","2-AGME"],"clusters":{"FM":[[0,3],[2]]}})");
  EXPECT_EQ(r.agme_count, 2);
  EXPECT_TRUE(r.variants.contains("F"));
  EXPECT_TRUE(r.variants.contains("M"));
  EXPECT_TRUE(r.variants.contains("FM"));
  EXPECT_EQ(r.clusters.at("FM"), (ClusterAnnotation{{{0, 3}, {2}}}));
}

TEST(Records, RoundTripIsByteStable) {
  for (const std::string& line : {kHerHelp, kFather}) {
    const RewriteInstance r = parse_record(line);
    const std::string canonical = to_record(r);
    EXPECT_EQ(parse_record(canonical), r);
    EXPECT_EQ(to_record(parse_record(canonical)), canonical);
  }
  EXPECT_EQ(to_record(parse_record(kHerHelp)),
            R"({"id":"help","source":"Yardımı için teşekkür ederim.","source_lang":"tr",)"
            R"("variants":{"F":"I am grateful for her help.","M":"I am grateful for his help.",)"
            R"("N":"I am grateful for their help."},"labels":["target_only_gendered_pronoun"],)"
            R"("agme_count":1})");
}

TEST(Records, StreamCollectsIssues) {
  std::istringstream in(kHerHelp + "\n\n{broken\n" + kFather + "\n");
  const LoadResult result = load_stream(in);
  EXPECT_EQ(result.instances.size(), 2u);
  ASSERT_EQ(result.issues.size(), 1u);
  EXPECT_EQ(result.issues[0].line, 3u);

  std::ostringstream out;
  save_stream(out, result.instances);
  std::istringstream again(out.str());
  EXPECT_EQ(load_stream(again).instances, result.instances);
  EXPECT_THROW(load("/nonexistent/corpus.jsonl"), IoError);
}

TEST(Records, ReferenceExamplesLoadCleanly) {
  const LoadResult result = load(std::string(GATEX_DATA_DIR) + "/reference_examples.jsonl");
  EXPECT_TRUE(result.issues.empty());
  EXPECT_EQ(result.instances.size(), 20u);
}

TEST(Prep, ScenarioCounts) {
  std::vector<RewriteInstance> corpus;
  corpus.push_back(instance("one", 1, {Label::TargetOnlyGenderedPronoun}, one_agme()));
  corpus.push_back(instance("two", 2, {Label::TargetOnlyGenderedPronoun},
                            {{"F", "She gave her her umbrella."},
                             {"M", "He gave him his umbrella."},
                             {"N", "They gave them their umbrella."},
                             {"FM", "She gave him her umbrella."},
                             {"MF", "He gave her his umbrella."},
                             {"FN", "She gave them her umbrella."}}));
  corpus.push_back(instance("noun", 1, {Label::TargetOnlyGenderedNounPronoun}, one_agme()));
  corpus.push_back(instance("three", 3, {Label::TargetOnlyGenderedPronoun}, one_agme()));
  corpus.push_back(instance("negative", 0, {Label::Mixed}, {{"0", "She left."}}));
  corpus.push_back(instance("no-neutral", 1, {Label::Name},
                            {{"F", "She left."}, {"M", "He left."}}));

  const PrepResult result = prepare_pronoun_only(corpus);
  std::vector<std::string> kept;
  for (const auto& r : result.kept) kept.push_back(r.id);
  EXPECT_EQ(kept, (std::vector<std::string>{"one", "two", "negative", "no-neutral"}));
  // one: 4, two: 4 + FM and MF to three targets each, no-neutral: F->M and M->F.
  EXPECT_EQ(result.scenarios.size(), 4u + 10u + 2u);
  EXPECT_EQ(result.scenarios[0].input_key, "F");
  EXPECT_EQ(result.scenarios[0].expected_key, "N");
  EXPECT_EQ(result.scenarios[4].target, GenderAssignment::uniform(Gender::Neutral, 2));
}

TEST(Prep, LanguageScorerFilters) {
  std::vector<RewriteInstance> corpus = {
      instance("a", 1, {Label::TargetOnlyGenderedPronoun}, one_agme(), "good"),
      instance("b", 1, {Label::TargetOnlyGenderedPronoun}, one_agme(), "bad")};
  PrepOptions options;
  options.scorer = [](std::string_view text, std::string_view) {
    return text == "good" ? 0.9 : 0.5;
  };
  const PrepResult result = prepare_pronoun_only(corpus, options);
  ASSERT_EQ(result.kept.size(), 1u);
  EXPECT_EQ(result.kept[0].id, "a");
}

TEST(Scenarios, RoundTrip) {
  std::vector<RewriteInstance> corpus = {instance("two", 2, {Label::TargetOnlyGenderedPronoun},
                                                  {{"F", "She gave her her umbrella."},
                                                   {"M", "He gave him his umbrella."},
                                                   {"MF", "He gave her his umbrella."}})};
  const auto scenarios = prepare_pronoun_only(corpus).scenarios;
  ASSERT_FALSE(scenarios.empty());
  std::ostringstream out;
  save_scenarios(out, scenarios);
  std::istringstream in(out.str());
  EXPECT_EQ(load_scenarios(in), scenarios);
  EXPECT_THROW(parse_scenario(R"({"instance_id":"x","input_key":"F","expected_key":"M","target":"Q","input":"a","expected":"b"})"),
               SchemaError);
}

TEST(Stats, HandCounts) {
  std::vector<RewriteInstance> corpus = {
      instance("a", 1, {Label::TargetOnlyGenderedPronoun, Label::Name}, one_agme(), "bir"),
      instance("b", 2, {Label::TargetOnlyGenderedPronoun},
               {{"F", "She gave her her umbrella."}, {"M", "He gave him his umbrella."}},
               "bir iki üç"),
      instance("c", 0, {Label::SourceTargetGenderedNoun}, {{"0", "My mother left."}},
               "bir iki")};
  const CorpusStats s = stats(corpus);
  EXPECT_EQ(s.total, 3u);
  EXPECT_EQ(s.label_counts.at(Label::TargetOnlyGenderedPronoun), 2u);
  EXPECT_EQ(s.label_counts.at(Label::Name), 1u);
  EXPECT_EQ(s.label_counts.at(Label::Mixed), 0u);
  EXPECT_EQ(s.agme_counts.at(0), 1u);
  EXPECT_EQ(s.agme_counts.at(1), 1u);
  EXPECT_EQ(s.agme_counts.at(2), 1u);
  EXPECT_EQ(s.agme_counts.at(3), 0u);
  EXPECT_EQ(s.source_lengths, (LengthSummary{3, 1.0, 1.5, 2.0, 2.5, 3.0}));
  EXPECT_EQ(s.target_lengths, (LengthSummary{3, 2.0, 2.5, 3.0, 4.0, 5.0}));
  EXPECT_NE(format_stats(s).find("total instance count"), std::string::npos);
}

TEST(Stats, EmptyCorpus) {
  const CorpusStats s = stats(std::vector<RewriteInstance>{});
  EXPECT_EQ(s.total, 0u);
  EXPECT_EQ(s.agme_counts.size(), 4u);
  EXPECT_EQ(s.source_lengths.count, 0u);
  EXPECT_EQ(summarize_lengths({4, 1, 3, 2}), (LengthSummary{4, 1.0, 1.75, 2.5, 3.25, 4.0}));
}

}  // namespace
}  // namespace gatex
