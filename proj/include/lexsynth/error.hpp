// Copyright 2026 The lexsynth Authors
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

#ifndef LEXSYNTH_ERROR_HPP_
#define LEXSYNTH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexsynth {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Input data violates its file format. Carries the 1-based line number
/// when one is known (0 otherwise).
class FormatError : public Error {
 public:
  FormatError(const std::string& where, std::size_t line,
              const std::string& what)
      : Error(line ? where + ":" + std::to_string(line) + ": " + what
                   : where + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Inputs are individually well-formed but violate an operation's
/// precondition (mismatched lengths, schemas, languages...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexsynth

#endif  // LEXSYNTH_ERROR_HPP_
