// Copyright 2026 The Tourney Authors
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

#ifndef TOURNEY_ERROR_HPP
#define TOURNEY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourney {

enum class ErrorKind {
  kInvalidArgument,
  kNotTwoRegular,
  kIllegalEdge,
  kNotConnected,
  kOffBoard,
  kRailNotPresent,
  kAttemptsExhausted,
  kEpochLimit,
  kBadSize,
  kObfuscationFailed,
  kParseError,
  kIoError,
  kEmptySet,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotTwoRegular: return "NotTwoRegular";
    case ErrorKind::kIllegalEdge: return "IllegalEdge";
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kOffBoard: return "OffBoard";
    case ErrorKind::kRailNotPresent: return "RailNotPresent";
    case ErrorKind::kAttemptsExhausted: return "AttemptsExhausted";
    case ErrorKind::kEpochLimit: return "EpochLimit";
    case ErrorKind::kBadSize: return "BadSize";
    case ErrorKind::kObfuscationFailed: return "ObfuscationFailed";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kEmptySet: return "EmptySet";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures additionally remember the 1-based line they occurred on.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::kParseError,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tourney

#endif  // TOURNEY_ERROR_HPP
