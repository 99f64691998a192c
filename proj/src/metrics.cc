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
#include <cmath>
#include <map>

#include "gatex/errors.h"
#include "gatex/evaluator.h"
#include "gatex/text.h"

namespace gatex {
namespace {

void check_lengths(std::size_t hypotheses, std::size_t references) {
  if (hypotheses != references) {
    throw LengthMismatch(std::to_string(hypotheses) + " hypotheses vs " +
                         std::to_string(references) + " references");
  }
}

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts count_ngrams(const std::vector<std::string>& words, std::size_t order) {
  NgramCounts counts;
  if (words.size() < order) return counts;
  for (std::size_t i = 0; i + order <= words.size(); ++i) {
    ++counts[std::vector<std::string>(words.begin() + i, words.begin() + i + order)];
  }
  return counts;
}

}  // namespace

double accuracy(std::span<const std::string> hypotheses, std::span<const std::string> references) {
  check_lengths(hypotheses.size(), references.size());
  if (hypotheses.empty()) return 100.0;
  std::size_t exact = 0;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    if (trim(hypotheses[i]) == trim(references[i])) ++exact;
  }
  return 100.0 * static_cast<double>(exact) / static_cast<double>(hypotheses.size());
}

BleuStats::BleuStats(int max_order)
    : matches(static_cast<std::size_t>(std::max(max_order, 1)), 0),
      totals(static_cast<std::size_t>(std::max(max_order, 1)), 0) {}

void BleuStats::add(std::string_view hypothesis, std::string_view reference) {
  const std::vector<std::string> hyp = split_words(hypothesis);
  const std::vector<std::string> ref = split_words(reference);
  hypothesis_length += hyp.size();
  reference_length += ref.size();
  for (std::size_t n = 1; n <= matches.size(); ++n) {
    const NgramCounts hyp_counts = count_ngrams(hyp, n);
    const NgramCounts ref_counts = count_ngrams(ref, n);
    for (const auto& [gram, count] : hyp_counts) {
      totals[n - 1] += count;
      if (auto it = ref_counts.find(gram); it != ref_counts.end()) {
        matches[n - 1] += std::min(count, it->second);
      }
    }
  }
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  if (other.matches.size() != matches.size()) {
    throw LengthMismatch("cannot merge BLEU statistics of different orders");
  }
  for (std::size_t i = 0; i < matches.size(); ++i) {
    matches[i] += other.matches[i];
    totals[i] += other.totals[i];
  }
  hypothesis_length += other.hypothesis_length;
  reference_length += other.reference_length;
  return *this;
}

double BleuStats::score(BleuSmoothing smoothing) const {
  if (hypothesis_length == 0) return reference_length == 0 ? 100.0 : 0.0;
  double log_sum = 0.0;
  std::size_t orders = 0;
  double exp_divisor = 1.0;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (totals[i] == 0) continue;
    ++orders;
    const double m = static_cast<double>(matches[i]);
    const double t = static_cast<double>(totals[i]);
    double precision = m / t;
    if (matches[i] == 0) {
      switch (smoothing) {
        case BleuSmoothing::None:
          return 0.0;
        case BleuSmoothing::AddOne:
          if (i == 0) return 0.0;
          break;
        case BleuSmoothing::Exp:
          exp_divisor *= 2.0;
          precision = 1.0 / (exp_divisor * t);
          break;
      }
    }
    if (smoothing == BleuSmoothing::AddOne && i > 0) precision = (m + 1.0) / (t + 1.0);
    log_sum += std::log(precision);
  }
  const double brevity =
      hypothesis_length >= reference_length
          ? 1.0
          : std::exp(1.0 - static_cast<double>(reference_length) /
                               static_cast<double>(hypothesis_length));
  return 100.0 * brevity * std::exp(log_sum / static_cast<double>(orders));
}

double bleu(std::span<const std::string> hypotheses, std::span<const std::string> references,
            const BleuOptions& options) {
  check_lengths(hypotheses.size(), references.size());
  if (hypotheses.empty()) throw EmptyCorpus("BLEU needs at least one sentence pair");
  BleuStats stats(options.max_order);
  for (std::size_t i = 0; i < hypotheses.size(); ++i) stats.add(hypotheses[i], references[i]);
  return stats.score(options.smoothing);
}

std::size_t word_edit_distance(std::span<const std::string> hypothesis,
                               std::span<const std::string> reference) {
  std::vector<std::size_t> previous(reference.size() + 1);
  std::vector<std::size_t> current(reference.size() + 1);
  for (std::size_t j = 0; j <= reference.size(); ++j) previous[j] = j;
  for (std::size_t i = 1; i <= hypothesis.size(); ++i) {
    current[0] = i;
    for (std::size_t j = 1; j <= reference.size(); ++j) {
      const std::size_t substitution =
          previous[j - 1] + (hypothesis[i - 1] == reference[j - 1] ? 0 : 1);
      current[j] = std::min({substitution, previous[j] + 1, current[j - 1] + 1});
    }
    std::swap(previous, current);
  }
  return previous[reference.size()];
}

void WerStats::add(std::string_view hypothesis, std::string_view reference) {
  const std::vector<std::string> hyp = split_words(hypothesis);
  const std::vector<std::string> ref = split_words(reference);
  edits += word_edit_distance(hyp, ref);
  reference_words += ref.size();
}

WerStats& WerStats::operator+=(const WerStats& other) {
  edits += other.edits;
  reference_words += other.reference_words;
  return *this;
}

double WerStats::percent() const {
  if (reference_words == 0) {
    if (edits == 0) return 0.0;
    throw EmptyReference("WER is undefined: references contain no words");
  }
  return 100.0 * static_cast<double>(edits) / static_cast<double>(reference_words);
}

double wer(std::span<const std::string> hypotheses, std::span<const std::string> references) {
  check_lengths(hypotheses.size(), references.size());
  WerStats stats;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) stats.add(hypotheses[i], references[i]);
  return stats.percent();
}

std::vector<DiffSpan> diff_sequences(std::span<const std::string> a,
                                     std::span<const std::string> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::size_t>> cost(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) cost[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) cost[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      cost[i][j] = std::min({cost[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1),
                             cost[i - 1][j] + 1, cost[i][j - 1] + 1});
    }
  }

  // Walk back, marking matched positions; everything between two matches is
  // one span.
  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && cost[i][j] == cost[i - 1][j - 1]) {
      matched.emplace_back(i - 1, j - 1);
      --i;
      --j;
    } else if (i > 0 && j > 0 && cost[i][j] == cost[i - 1][j - 1] + 1) {
      --i;
      --j;
    } else if (i > 0 && cost[i][j] == cost[i - 1][j] + 1) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(matched.begin(), matched.end());
  matched.emplace_back(n, m);

  std::vector<DiffSpan> spans;
  std::size_t a_pos = 0;
  std::size_t b_pos = 0;
  for (const auto& [ai, bj] : matched) {
    if (ai > a_pos || bj > b_pos) spans.push_back({a_pos, ai, b_pos, bj});
    a_pos = ai + 1;
    b_pos = bj + 1;
  }
  return spans;
}

}  // namespace gatex
