//
// Copyright 2026 The tkk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef TKK_ERROR_H_
#define TKK_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tkk {

enum class ErrorCode {
  // sql_parser
  kUnterminatedString,
  kIllegalCharacter,
  kSyntaxError,
  kUnsupportedConstruct,
  // prompting
  kUnknownTask,
  // sampler / splits
  kInvalidRatio,
  kInvalidFraction,
  kOverlappingIds,
  // dataset_io
  kMalformedSchemaFile,
  kDuplicateDbId,
  kMalformedExampleFile,
  kUnknownDbId,
  kEmptyInteraction,
  kCountMismatch,
  kUnknownExampleId,
  kIoError,
  // evaluator
  kGoldUnparseable,
  kBackendUnavailable,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported with this exception.
// `position` is a byte offset into the SQL text for tokenizer and parser
// errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const { return code_; }
  const std::optional<std::size_t>& position() const { return position_; }

  // True for errors that originate from the SQL tokenizer or parser.
  bool IsParseError() const;

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace tkk

#endif  // TKK_ERROR_H_
