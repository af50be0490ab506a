/*
   Copyright 2026 The charp authors

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

#ifndef CHARP_ERRORS_HPP
#define CHARP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charp {

/// Base class for every library error.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad field/variable configuration: unknown variable, mismatched configs,
/// non-prime characteristic, unsupported (p, e).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Input outside the operation's mathematical domain. Carries an optional
/// witness (e.g. the variable with nonzero partial for a failed p-th root).
class DomainError : public Error {
  public:
    DomainError(const std::string& msg, std::string witness = "")
        : Error(msg), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

  private:
    std::string witness_;
};

/// Element not contained in the requested K^p(a_1,...,a_s) subfield.
/// Carries the offending exponent residue class as text.
class MembershipError : public Error {
  public:
    MembershipError(const std::string& msg, std::string residue_class)
        : Error(msg), residue_class_(std::move(residue_class)) {}
    const std::string& residue_class() const { return residue_class_; }

  private:
    std::string residue_class_;
};

/// Violated mathematical precondition (non-closed input to a Cartier
/// decomposition, dependent p-basis candidates, wrong valuation variable...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Class sits too high in the filtration for the requested operation.
class FiltrationError : public Error {
  public:
    FiltrationError(const std::string& msg, int level)
        : Error(msg), level_(level) {}
    /// Minimal m with the class in U_m.
    int level() const { return level_; }

  private:
    int level_;
};

/// Presentation shape the library does not handle (e.g. a Laurent
/// coefficient that is not a monomial in the uniformizer).
class UnsupportedPresentationError : public Error {
  public:
    using Error::Error;
};

/// Exponent arithmetic left the machine range. Always thrown, never wrapped.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// Text input rejected by the expression grammar.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, int line, int column,
               std::string expected = "")
        : Error(msg), line_(line), column_(column),
          expected_(std::move(expected)) {}
    int line() const { return line_; }
    int column() const { return column_; }
    /// Comma-separated set of tokens that would have been accepted.
    const std::string& expected() const { return expected_; }

  private:
    int line_;
    int column_;
    std::string expected_;
};

}  // namespace charp

#endif
