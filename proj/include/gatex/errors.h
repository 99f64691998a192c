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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gatex {

// Base class for all library errors. code() is a stable identifier used in
// diagnostics records (e.g. "AnchorMisaligned", "SchemaError").
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define GATEX_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

GATEX_DEFINE_ERROR(DataFormatError);
GATEX_DEFINE_ERROR(IoError);
GATEX_DEFINE_ERROR(ProviderTimeout);
GATEX_DEFINE_ERROR(ProviderProtocolError);
GATEX_DEFINE_ERROR(InvalidInput);
GATEX_DEFINE_ERROR(AnchorMisaligned);
GATEX_DEFINE_ERROR(AssignmentArityMismatch);
GATEX_DEFINE_ERROR(UnclusteredPronoun);
GATEX_DEFINE_ERROR(InvalidCluster);
GATEX_DEFINE_ERROR(SchemaError);
GATEX_DEFINE_ERROR(LengthMismatch);
GATEX_DEFINE_ERROR(EmptyCorpus);
GATEX_DEFINE_ERROR(EmptyReference);
GATEX_DEFINE_ERROR(ConfigError);

#undef GATEX_DEFINE_ERROR

}  // namespace gatex
