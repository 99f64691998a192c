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

#include <gtest/gtest.h>

#include "gatex/errors.h"
#include "gatex/evaluator.h"

namespace gatex {
namespace {

struct LabelCase {
  std::string name;
  std::string input;
  std::string output;
  std::string reference;
  ErrorLabel label;
};

void PrintTo(const LabelCase& c, std::ostream* os) { *os << c.name; }

class ClassifyError : public ::testing::TestWithParam<LabelCase> {};

TEST_P(ClassifyError, AssignsSingleLabel) {
  const LabelCase& c = GetParam();
  EXPECT_EQ(classify_error(c.input, c.output, c.reference), std::set<ErrorLabel>{c.label});
}

INSTANTIATE_TEST_SUITE_P(
    Documented, ClassifyError,
    ::testing::Values(
        LabelCase{"Comma",
                  "Well, you surprised me!, Afshin said as she opened the door and saw Mary "
                  "standing there.",
                  "Well, you surprised me! Afshin said as they opened the door and saw Mary "
                  "standing there.",
                  "Well, you surprised me!, Afshin said as they opened the door and saw Mary "
                  "standing there.",
                  ErrorLabel::Comma},
        LabelCase{"OtherCorrections", "I have never heard of him before that.",
                  "I had never heard of them before that.",
                  "I have never heard of them before that.", ErrorLabel::OtherCorrections},
        LabelCase{"POS", "The secretary noted down what her boss had said.",
                  "The secretary noted down what they boss had said.",
                  "The secretary noted down what their boss had said.", ErrorLabel::POS},
        LabelCase{"SVA", "Does she come here every week?", "Does they come here every week?",
                  "Do they come here every week?", ErrorLabel::SVA},
        LabelCase{"ThemToThemselves", "She saw her play baseball.",
                  "They saw themselves play baseball.", "They saw them play baseball.",
                  ErrorLabel::ThemToThemselves},
        LabelCase{"NoneResponse", "He has no capacity to be a teacher.", "none",
                  "They have no capacity to be a teacher.", ErrorLabel::NoneResponse},
        LabelCase{"OtherModifications",
                  "In any case, I will tell him about the critical tone your House has adopted "
                  "on this issue.",
                  "In any case, I will tell them about the critical tone their House has "
                  "adopted on this issue.",
                  "In any case, I will tell them about the critical tone your House has adopted "
                  "on this issue.",
                  ErrorLabel::OtherModifications}),
    [](const auto& info) { return info.param.name; });

TEST(ClassifyError, NoneVariants) {
  EXPECT_EQ(classify_error("He left.", "  None. ", "They left."),
            std::set<ErrorLabel>{ErrorLabel::NoneResponse});
  EXPECT_TRUE(classify_error("He left.", "They left.", "They left.").empty());
}

TEST(ClassifyError, SeveralLabelsAtOnce) {
  const auto labels = classify_error("Does she see her mother, often?",
                                     "Does they see they mother often?",
                                     "Do they see their mother, often?");
  EXPECT_EQ(labels, (std::set<ErrorLabel>{ErrorLabel::SVA, ErrorLabel::POS, ErrorLabel::Comma}));
}

TEST(ErrorLabels, Names) {
  for (ErrorLabel label : kAllErrorLabels) {
    EXPECT_EQ(parse_error_label(to_string(label)), label);
    EXPECT_EQ(parse_error_label(display_name(label)), label);
  }
  EXPECT_EQ(display_name(ErrorLabel::ThemToThemselves), "Them -> Themselves");
  EXPECT_FALSE(parse_error_label("typo"));
}

TEST(DiffSequences, Spans) {
  const std::vector<std::string> a = {"a", "b", "c", "d"};
  const std::vector<std::string> b = {"a", "x", "c", "d", "e"};
  EXPECT_EQ(diff_sequences(a, b), (std::vector<DiffSpan>{{1, 2, 1, 2}, {4, 4, 4, 5}}));
  EXPECT_TRUE(diff_sequences(a, a).empty());
}

TEST(Consistency, GenderOnlyDifferencesPass) {
  EXPECT_TRUE(validate_consistency({{"F", "She is a doctor"},
                                    {"M", "He is a doctor"},
                                    {"N", "They are a doctor"}})
                  .consistent());
  EXPECT_TRUE(validate_consistency({{"F", "My mother read her book."},
                                    {"M", "My father read his book."},
                                    {"N", "My parent read their book."}})
                  .consistent());
}

TEST(Consistency, ReportsOtherDifferences) {
  const ConsistencyReport report =
      validate_consistency({{"F", "She left early"}, {"M", "He left late"}});
  EXPECT_FALSE(report.consistent());
  EXPECT_EQ(report.spans, (std::vector<InconsistentSpan>{{"F", "M", "early", "late"}}));
}

TEST(Consistency, NeedsTwoVariants) {
  const ConsistencyReport report = validate_consistency({{"F", "She left."}});
  EXPECT_FALSE(report.consistent());
  ASSERT_TRUE(report.diagnostic);
  EXPECT_EQ(report.diagnostic->rfind("EmptyInput", 0), 0u);
}

TEST(Evaluate, CountsMetricsAndLabels) {
  const std::vector<EvalItem> items = {
      {"1", "Is she your teacher?", "Are they your teacher?", "Are they your teacher?"},
      {"2", "Does she come here every week?", "Does they come here every week?",
       "Do they come here every week?"},
      {"3", "He has no capacity.", "none", "They have no capacity."},
      {"4", "He left.", "They left.", "They left."}};
  const EvalReport report = evaluate(items);
  EXPECT_EQ(report.n_instances, 4u);
  EXPECT_DOUBLE_EQ(report.accuracy_percent, 50.0);
  EXPECT_EQ(report.per_error_counts.at(ErrorLabel::SVA), 1u);
  EXPECT_EQ(report.per_error_counts.at(ErrorLabel::NoneResponse), 1u);
  EXPECT_GT(report.wer_percent, 0.0);
  EXPECT_LT(report.bleu, 100.0);
}

TEST(Evaluate, EmptyInput) {
  const EvalReport report = evaluate(std::vector<EvalItem>{});
  EXPECT_EQ(report.n_instances, 0u);
  EXPECT_DOUBLE_EQ(report.accuracy_percent, 100.0);
}

TEST(Report, JsonRoundTrip) {
  EvalReport report;
  report.accuracy_percent = 87.5;
  report.bleu = 91.25;
  report.wer_percent = 3.125;
  report.n_instances = 8;
  report.per_error_counts[ErrorLabel::Comma] = 1;
  report.per_error_counts[ErrorLabel::SVA] = 2;
  const EvalReport back = report_from_json(report_to_json(report));
  EXPECT_DOUBLE_EQ(back.accuracy_percent, 87.5);
  EXPECT_DOUBLE_EQ(back.bleu, 91.25);
  EXPECT_DOUBLE_EQ(back.wer_percent, 3.125);
  EXPECT_EQ(back.n_instances, 8u);
  EXPECT_EQ(back.per_error_counts.at(ErrorLabel::SVA), 2u);
  EXPECT_EQ(back.per_error_counts.at(ErrorLabel::Comma), 1u);
  EXPECT_THROW(report_from_json("{\"accuracy\": \"high\"}"), SchemaError);
  EXPECT_THROW(report_from_json("not json"), SchemaError);
  EXPECT_NE(format_report_table(report).find("SVA"), std::string::npos);
}

}  // namespace
}  // namespace gatex
