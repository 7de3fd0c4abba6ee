/*
 * Copyright 2026 The Orient Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORIENT_ERROR_HPP_
#define ORIENT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace orient {

// Error categories shared by the C++ core, the C API (status codes) and the
// CLI (exit codes).
enum class ErrorCode {
  kInvalidArgument,   // bad value fed to an operation (non-finite, wrong size)
  kInvalidScheme,     // malformed or inconsistent scheme descriptor
  kDegenerate,        // numerically degenerate state (zero-norm vector, ...)
  kInvalidLocation,   // object location with z <= 0
  kParse,             // malformed input text (KITTI labels, CSV rows)
  kIo,                // file could not be opened/read/written
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kInvalidScheme:
      return "invalid-scheme";
    case ErrorCode::kDegenerate:
      return "degenerate";
    case ErrorCode::kInvalidLocation:
      return "invalid-location";
    case ErrorCode::kParse:
      return "parse-error";
    case ErrorCode::kIo:
      return "io-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace orient

#endif  // ORIENT_ERROR_HPP_
