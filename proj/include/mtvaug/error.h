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

#ifndef MTVAUG_ERROR_H_
#define MTVAUG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtvaug {

enum class ErrorCode {
  kEmptyInput,
  kMalformedLine,
  kIo,
  kEmptyDataset,
  kSingleClassDataset,
  kUnknownLabel,
  kDimensionMismatch,
  kInvalidArgument,
  kInvalidGrid,
  kSchema,
  kMissingBaseline,
  kMissingLexicon,
  kBadModelFile,
};

// Name used as the message prefix, e.g. "MalformedLine".
std::string_view ErrorCodeName(ErrorCode code);

// The single exception type thrown by the library. `code()` identifies the
// failure kind; `what()` is "<CodeName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  // Source line for kMalformedLine / kSchema, 0 otherwise.
  int line() const { return line_; }

  static Error AtLine(ErrorCode code, int line, const std::string& detail);

 private:
  ErrorCode code_;
  int line_ = 0;
};

}  // namespace mtvaug

#endif  // MTVAUG_ERROR_H_
