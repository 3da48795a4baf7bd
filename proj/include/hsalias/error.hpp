/*
 * Copyright 2026 The hsalias Authors
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

#ifndef HSALIAS_ERROR_HPP
#define HSALIAS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hsalias {

/// Raised when a caller-supplied value violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
  explicit InvalidArgument(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when an iterative computation fails to reach its accuracy target.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

/// Raised by the JSON/text readers on malformed input.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace hsalias

#endif
