// Copyright 2026 The wernerest Authors
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

#ifndef WERNEREST_ERRORS_HPP
#define WERNEREST_ERRORS_HPP

#include <charconv>
#include <stdexcept>
#include <string>

namespace wernerest {

/// A parameter lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Matrix dimensions do not match what the operation expects.
class ShapeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Reading or writing an output file failed.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip spelling of a value, for error messages.
inline std::string show(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

}  // namespace wernerest

#endif
