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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gatex/pronouns.h"
#include "gatex/text.h"

namespace gatex {

// One gender per coreference cluster, in cluster order. Never empty.
class GenderAssignment {
 public:
  explicit GenderAssignment(std::vector<Gender> per_cluster);

  static GenderAssignment uniform(Gender gender, std::size_t clusters = 1);
  // Parses "F", "FM", "NNF"... A single letter expands to `clusters` copies.
  static GenderAssignment from_key(std::string_view key, std::size_t clusters = 1);

  const std::vector<Gender>& per_cluster() const { return per_cluster_; }
  std::size_t size() const { return per_cluster_.size(); }
  bool uniform() const;
  // "F"/"M"/"N" when uniform, otherwise one letter per cluster.
  std::string key() const;

  bool operator==(const GenderAssignment&) const = default;

 private:
  std::vector<Gender> per_cluster_;
};

// Pronoun mentions per entity, as token indices into tokenize(original).
struct ClusterAnnotation {
  std::vector<std::vector<std::size_t>> clusters;

  bool operator==(const ClusterAnnotation&) const = default;
};

struct AnchorAlignment {
  std::vector<Token> original_tokens;
  std::vector<Token> neutral_tokens;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  // Equal token counts, and every pronoun position of the original faces a
  // neutral form or the identical token.
  bool aligned = false;
};

AnchorAlignment align_anchor(std::string_view original, std::string_view neutral);

struct EngenderOptions {
  const AgreementRules* rules = nullptr;  // null: bundled rules
  // Inputs containing any of these (case-folded) words are rejected with
  // InvalidInput. Null disables the check.
  const std::set<std::string, std::less<>>* gendered_nouns = nullptr;
};

struct EngenderResult {
  std::string text;
  // Set when the anchor could not be used and her/his fell back to the
  // disambiguation heuristic.
  bool low_confidence = false;
  std::vector<std::string> diagnostics;
};

// Rewrites every gendered pronoun of `original` into `target`. The category
// of "her"/"his" is read off the anchor token at the same position; other
// forms are looked up directly. target == Neutral returns the anchor.
EngenderResult engender_uniform(std::string_view original, std::string_view neutral,
                                Gender target, const EngenderOptions& options = {});

// Per-cluster rewrite. Throws AssignmentArityMismatch, InvalidCluster or
// UnclusteredPronoun when the annotation does not fit the sentence.
EngenderResult engender_clusters(std::string_view original, std::string_view neutral,
                                 const ClusterAnnotation& clusters,
                                 const GenderAssignment& assignment,
                                 const EngenderOptions& options = {});

struct Variant {
  std::optional<GenderAssignment> assignment;  // nullopt when there are no clusters
  std::string text;
};

// All 3^k assignments for k clusters, first cluster varying slowest in
// F, M, N order. k == 0 yields the original alone.
std::vector<Variant> enumerate_variants(std::string_view original, std::string_view neutral,
                                        const ClusterAnnotation& clusters,
                                        const EngenderOptions& options = {});

}  // namespace gatex
