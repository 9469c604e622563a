/**
 * Exception hierarchy shared by every module.
 *
 * Failures that are "data" (a failed axiom, a refuted link) are returned in
 * report structs; these exceptions are for contract violations and bad input.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aom {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Sign vectors over different ground sets were combined.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An element or label outside the ground set.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A covector or tope that was required to belong to some set does not.
class MembershipError : public Error {
  public:
    using Error::Error;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Configured caps (enumeration size, retry counts) exceeded.
class ResourceError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what),
          source_(std::move(source)), line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

  private:
    std::string source_;
    std::size_t line_;
};

}  // namespace aom
