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

#include <gtest/gtest.h>

#include "gatex/errors.h"
#include "support/generators.h"
#include "support/properties.h"

namespace gatex {
namespace {

const std::string kUmbrella = "She gave him her umbrella.";
const std::string kUmbrellaNeutral = "They gave them their umbrella.";
const ClusterAnnotation kUmbrellaClusters{{{0, 3}, {2}}};

TEST(EngenderUniform, PossessivePronounAnchor) {
  const std::string original = "The teacher compared my poem with one of his.";
  const std::string neutral = "The teacher compared my poem with one of theirs.";
  EXPECT_EQ(engender_uniform(original, neutral, Gender::Feminine).text,
            "The teacher compared my poem with one of hers.");
  EXPECT_EQ(engender_uniform(original, neutral, Gender::Masculine).text, original);
  EXPECT_EQ(engender_uniform(original, neutral, Gender::Neutral).text, neutral);
}

TEST(EngenderUniform, UmbrellaSentence) {
  EXPECT_EQ(engender_uniform(kUmbrella, kUmbrellaNeutral, Gender::Feminine).text,
            "She gave her her umbrella.");
  EXPECT_EQ(engender_uniform(kUmbrella, kUmbrellaNeutral, Gender::Masculine).text,
            "He gave him his umbrella.");
}

TEST(EngenderUniform, GenderSwapLeavesVerbsAlone) {
  const std::string original = "She is here and she was there.";
  const std::string neutral = "They are here and they were there.";
  EXPECT_EQ(engender_uniform(original, neutral, Gender::Masculine).text,
            "He is here and he was there.");
}

TEST(EngenderUniform, MisalignedAnchorFallsBackToHeuristics) {
  const EngenderResult result =
      engender_uniform("Her dog left early.", "Their dog left.", Gender::Masculine);
  EXPECT_EQ(result.text, "His dog left early.");
  EXPECT_TRUE(result.low_confidence);
  ASSERT_FALSE(result.diagnostics.empty());
  EXPECT_EQ(result.diagnostics[0].rfind("AnchorMisaligned", 0), 0u);
  EXPECT_TRUE(align_anchor(kUmbrella, kUmbrellaNeutral).aligned);
  EXPECT_FALSE(align_anchor("She left early.", "They left.").aligned);
}

TEST(EngenderClusters, MixedAssignments) {
  EXPECT_EQ(engender_clusters(kUmbrella, kUmbrellaNeutral, kUmbrellaClusters,
                              GenderAssignment({Gender::Neutral, Gender::Masculine}))
                .text,
            "They gave him their umbrella.");
  EXPECT_EQ(engender_clusters(kUmbrella, kUmbrellaNeutral, kUmbrellaClusters,
                              GenderAssignment({Gender::Feminine, Gender::Neutral}))
                .text,
            "She gave them her umbrella.");
}

TEST(EngenderClusters, NeutralSubjectPluralizesVerb) {
  const std::string original = "She is proud of him.";
  const std::string neutral = "They are proud of them.";
  const ClusterAnnotation clusters{{{0}, {4}}};
  EXPECT_EQ(engender_clusters(original, neutral, clusters,
                              GenderAssignment({Gender::Neutral, Gender::Feminine}))
                .text,
            "They are proud of her.");
  EXPECT_EQ(engender_clusters(original, neutral, clusters,
                              GenderAssignment({Gender::Masculine, Gender::Neutral}))
                .text,
            "He is proud of them.");
}

TEST(EngenderClusters, Errors) {
  EXPECT_THROW(engender_clusters(kUmbrella, kUmbrellaNeutral, kUmbrellaClusters,
                                 GenderAssignment::uniform(Gender::Feminine, 1)),
               AssignmentArityMismatch);
  EXPECT_THROW(engender_clusters(kUmbrella, kUmbrellaNeutral, ClusterAnnotation{{{0}, {2}}},
                                 GenderAssignment::uniform(Gender::Feminine, 2)),
               UnclusteredPronoun);
}

TEST(EnumerateVariants, UmbrellaOrder) {
  const auto variants = enumerate_variants(kUmbrella, kUmbrellaNeutral, kUmbrellaClusters);
  ASSERT_EQ(variants.size(), 9u);
  const std::vector<std::string> expected = {
      "She gave her her umbrella.",    "She gave him her umbrella.",
      "She gave them her umbrella.",   "He gave her his umbrella.",
      "He gave him his umbrella.",     "He gave them his umbrella.",
      "They gave her their umbrella.", "They gave him their umbrella.",
      "They gave them their umbrella."};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(variants[i].text, expected[i]) << i;
    ASSERT_TRUE(variants[i].assignment);
    EXPECT_EQ(variants[i].assignment->size(), 2u);
  }
  EXPECT_EQ(variants[5].assignment->key(), "MN");
}

TEST(EnumerateVariants, NoClustersYieldsOriginal) {
  const auto variants =
      enumerate_variants("I saw the cat.", "I saw the cat.", ClusterAnnotation{});
  ASSERT_EQ(variants.size(), 1u);
  EXPECT_FALSE(variants[0].assignment);
  EXPECT_EQ(variants[0].text, "I saw the cat.");
}

TEST(EnumerateVariants, SingleAmbiguousPronoun) {
  const auto variants =
      enumerate_variants("Her help was needed.", "Their help was needed.", ClusterAnnotation{{{0}}});
  ASSERT_EQ(variants.size(), 3u);
  EXPECT_EQ(variants[0].text, "Her help was needed.");
  EXPECT_EQ(variants[1].text, "His help was needed.");
  EXPECT_EQ(variants[2].text, "Their help was needed.");
}

TEST(EnumerateVariants, InvalidClusters) {
  EXPECT_THROW(enumerate_variants(kUmbrella, kUmbrellaNeutral, ClusterAnnotation{{{0, 1}, {2, 3}}}),
               InvalidCluster);
  EXPECT_THROW(enumerate_variants(kUmbrella, kUmbrellaNeutral, ClusterAnnotation{{{0, 3}, {3, 2}}}),
               InvalidCluster);
}

TEST(GenderAssignment, Keys) {
  EXPECT_EQ(GenderAssignment::from_key("FN", 2).per_cluster(),
            (std::vector<Gender>{Gender::Feminine, Gender::Neutral}));
  EXPECT_EQ(GenderAssignment::from_key("M", 3).size(), 3u);
  EXPECT_EQ(GenderAssignment::from_key("M", 3).key(), "M");
  EXPECT_EQ(GenderAssignment::from_key("MF", 2).key(), "MF");
  EXPECT_TRUE(GenderAssignment::from_key("N", 2).uniform());
  EXPECT_FALSE(GenderAssignment::from_key("FM", 2).uniform());
  EXPECT_THROW(GenderAssignment::from_key("X", 1), InvalidInput);
  EXPECT_THROW(GenderAssignment(std::vector<Gender>{}), AssignmentArityMismatch);
}

TEST(EngenderNouns, RejectsGenderedNounWhenAsked) {
  const std::set<std::string, std::less<>> nouns = {"mother"};
  EngenderOptions options;
  options.gendered_nouns = &nouns;
  EXPECT_THROW(engender_uniform("My mother read her book.", "My mother read their book.",
                                Gender::Masculine, options),
               InvalidInput);
  EXPECT_NO_THROW(engender_uniform("She read her book.", "They read their book.",
                                   Gender::Masculine, options));
}

TEST(Properties, TokenCount) {
  const auto result = testing::engender_token_count(testing::kPropertyCases, 31);
  EXPECT_TRUE(result.passed()) << result.first_violation;
}

TEST(Properties, ColumnPurity) {
  const auto result = testing::engender_column_purity(testing::kPropertyCases, 32);
  EXPECT_TRUE(result.passed()) << result.first_violation;
}

TEST(Properties, RoundTrip) {
  const auto result = testing::engender_round_trip(testing::kPropertyCases, 33);
  EXPECT_TRUE(result.passed()) << result.first_violation;
}

TEST(Properties, EnumerationMatchesOracle) {
  const auto result = testing::enumeration_matches_oracle(testing::kPropertyCases, 34);
  EXPECT_TRUE(result.passed()) << result.first_violation;
}

TEST(Properties, FeminineMasculineSwapKeepsVerbs) {
  testing::Rng rng(35);
  for (int i = 0; i < 2000; ++i) {
    const auto sentence = testing::TemplateSentence::random(rng);
    const std::string feminine = sentence.render_uniform(Gender::Feminine);
    const std::string neutral = sentence.render_uniform(Gender::Neutral);
    const auto before = tokenize(feminine);
    const auto after = tokenize(engender_uniform(feminine, neutral, Gender::Masculine).text);
    ASSERT_EQ(before.size(), after.size());
    for (std::size_t t = 0; t < before.size(); ++t) {
      if (!pronoun_of(before[t])) EXPECT_EQ(before[t].surface, after[t].surface) << feminine;
    }
  }
}

}  // namespace
}  // namespace gatex
