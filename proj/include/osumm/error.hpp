// Copyright 2026 the oracle-summ authors
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

#ifndef OSUMM_ERROR_HPP
#define OSUMM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace osumm {

// Error categories map directly onto the CLI exit codes.
enum class ErrorKind {
  validation = 2,  // malformed input, schema violations, unusable configs
  runtime = 3,     // search / numeric failures on valid input
  io = 4,          // filesystem problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

  static Error validation(const std::string& msg) {
    return Error(ErrorKind::validation, msg);
  }
  static Error runtime(const std::string& msg) {
    return Error(ErrorKind::runtime, msg);
  }
  static Error io(const std::string& msg) { return Error(ErrorKind::io, msg); }

 private:
  ErrorKind kind_;
};

}  // namespace osumm

#endif  // OSUMM_ERROR_HPP
