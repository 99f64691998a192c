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

#include <cstdint>
#include <string>

namespace gatex::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;

  bool passed() const { return cases > 0 && violations == 0; }
};

inline constexpr std::size_t kPropertyCases = 10000;

PropertyResult tokenizer_round_trip(std::size_t cases, std::uint64_t seed);

// Rule-based output has no feminine or masculine forms, keeps the token
// count, edits only pronouns and agreement verbs, and is a fixed point.
PropertyResult neutralizer_idempotence(std::size_t cases, std::uint64_t seed);
PropertyResult neutralizer_purity(std::size_t cases, std::uint64_t seed);

// Generated template sentences with a correct neutral anchor.
PropertyResult engender_token_count(std::size_t cases, std::uint64_t seed);
PropertyResult engender_column_purity(std::size_t cases, std::uint64_t seed);
PropertyResult engender_round_trip(std::size_t cases, std::uint64_t seed);
PropertyResult enumeration_matches_oracle(std::size_t cases, std::uint64_t seed);

}  // namespace gatex::testing
