//
// Copyright 2026 The mtvaug Authors
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

#include "mtvaug/error.h"

namespace mtvaug {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kMalformedLine:
      return "MalformedLine";
    case ErrorCode::kIo:
      return "IoError";
    case ErrorCode::kEmptyDataset:
      return "EmptyDataset";
    case ErrorCode::kSingleClassDataset:
      return "SingleClassDataset";
    case ErrorCode::kUnknownLabel:
      return "UnknownLabel";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidGrid:
      return "InvalidGrid";
    case ErrorCode::kSchema:
      return "SchemaError";
    case ErrorCode::kMissingBaseline:
      return "MissingBaseline";
    case ErrorCode::kMissingLexicon:
      return "MissingLexicon";
    case ErrorCode::kBadModelFile:
      return "BadModelFile";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
      code_(code) {}

Error Error::AtLine(ErrorCode code, int line, const std::string& detail) {
  Error error(code, "line " + std::to_string(line) + ": " + detail);
  error.line_ = line;
  return error;
}

}  // namespace mtvaug
