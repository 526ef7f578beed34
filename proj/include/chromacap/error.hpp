/*
 * Copyright 2026 The chromacap Authors
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

#ifndef CHROMACAP_ERROR_HPP
#define CHROMACAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chromacap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a formula (log of zero, N2 <= N1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A distance-based metric was requested for a palette that only carries its size.
class SizedOnlyPalette : public Error {
 public:
  explicit SizedOnlyPalette(const std::string& name)
      : Error("palette '" + name + "' is sized-only; its colors are unknown") {}
};

class TooFewColors : public Error {
 public:
  explicit TooFewColors(const std::string& name)
      : Error("palette '" + name + "' needs at least 2 colors") {}
};

class InvalidPalette : public Error {
 public:
  using Error::Error;
};

/// Malformed palette document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class UnknownPalette : public Error {
 public:
  explicit UnknownPalette(const std::string& name)
      : Error("unknown built-in palette '" + name + "'") {}
};

/// A comparison involving a sized-only palette needs an externally supplied accuracy cost.
class MissingAccuracy : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the instance is too large.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace chromacap

#endif  // CHROMACAP_ERROR_HPP
