// Copyright 2026 The tosaudit Authors.
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

#ifndef TOSAUDIT_ERROR_H_
#define TOSAUDIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace tosaudit {

enum class ErrorCode {
  kInvalidArgument,
  kNotFound,
  kIo,
  kParse,
  kNetwork,
  kHttpStatus,
  kTimeout,
  kDigestMismatch,
  kPlatformMismatch,
  kEmptyDocument,
  kDegenerateDocument,
  kDuplicate,
  kUnmatched,
  kValidation,
  kNothingToRender,
};

// All library failures are reported as Error. The message is the
// user-facing text; code() lets callers branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tosaudit

#endif  // TOSAUDIT_ERROR_H_
