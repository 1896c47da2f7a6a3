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

#include "tkk/error.h"

namespace tkk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnterminatedString: return "UnterminatedString";
    case ErrorCode::kIllegalCharacter: return "IllegalCharacter";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::kUnknownTask: return "UnknownTask";
    case ErrorCode::kInvalidRatio: return "InvalidRatio";
    case ErrorCode::kInvalidFraction: return "InvalidFraction";
    case ErrorCode::kOverlappingIds: return "OverlappingIds";
    case ErrorCode::kMalformedSchemaFile: return "MalformedSchemaFile";
    case ErrorCode::kDuplicateDbId: return "DuplicateDbId";
    case ErrorCode::kMalformedExampleFile: return "MalformedExampleFile";
    case ErrorCode::kUnknownDbId: return "UnknownDbId";
    case ErrorCode::kEmptyInteraction: return "EmptyInteraction";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kUnknownExampleId: return "UnknownExampleId";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kGoldUnparseable: return "GoldUnparseable";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
  }
  return "Unknown";
}

namespace {

std::string FormatMessage(ErrorCode code, const std::string& message,
                          const std::optional<std::size_t>& position) {
  std::string out(ErrorCodeName(code));
  out += ": ";
  out += message;
  if (position) {
    out += " (at offset ";
    out += std::to_string(*position);
    out += ")";
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(FormatMessage(code, message, position)),
      code_(code),
      position_(position) {}

bool Error::IsParseError() const {
  return code_ == ErrorCode::kUnterminatedString ||
         code_ == ErrorCode::kIllegalCharacter ||
         code_ == ErrorCode::kSyntaxError ||
         code_ == ErrorCode::kUnsupportedConstruct;
}

}  // namespace tkk
