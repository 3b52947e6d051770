// Copyright 2026 The qsc Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Mismatched mode counts, matrix shapes, or multi-index lengths.
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// An enumeration (moment indices, errors, phase tuples, monomials,
/// Hilbert-space dimension) would exceed its configured budget.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// A data structure failed one of its invariants.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

class NotUnitary : public Error {
   public:
    using Error::Error;
};

class OrbitOverflow : public Error {
   public:
    using Error::Error;
};

/// Numerical failure: degenerate codeword norm, truncation tail too heavy,
/// non-converging quadrature, incomplete Kraus set.
class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Malformed input document. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
   public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {
    }
    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qsc
