/*
   Copyright 2026 The qleft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qleft {

/// Bad index sets, out-of-range generator indices, wrong tuple lengths.
class MalformedInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A rule right-hand side contains a word not strictly below its left-hand side.
class OrderViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// An operation defined only on the irreducible basis received a reducible word.
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class UnsupportedDegree : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class ExhaustedSearch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in the expression language, with a 0-based
/// character offset into the input.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace qleft
