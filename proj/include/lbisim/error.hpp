/*
 * Copyright 2026 The lbisim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lbisim {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A term violates the syntax of its calculus (unguarded summand, repeated
/// variable, construct from another calculus, misplaced hole).
class MalformedTerm : public Error {
public:
    using Error::Error;
};

class CrossCalculus : public Error {
public:
    using Error::Error;
};

class IncompleteSubstitution : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t limit)
        : Error("state budget of " + std::to_string(limit) + " exceeded"), limit_(limit) {}

    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

} // namespace lbisim
