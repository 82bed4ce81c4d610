#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace instanton {

// Process exit codes used by the command line front end.
enum class ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kUnsupportedTower = 3,
  kSingularity = 4,
  kCertification = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Malformed polynomial text. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ExitCode::kParse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a mathematical precondition
/// (constant term in a curve, u-degree-0 term in an extension class).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ExitCode::kParse, what) {}
};

class UnsupportedTowerError : public Error {
 public:
  explicit UnsupportedTowerError(const std::string& what)
      : Error(ExitCode::kUnsupportedTower, what) {}
};

/// Non-reduced curve or non-isolated singularity.
class SingularityError : public Error {
 public:
  explicit SingularityError(const std::string& what) : Error(ExitCode::kSingularity, what) {}
};

/// A truncation bound was too small or an internal consistency check failed.
/// Raised instead of returning an uncertified number.
class CertificationError : public Error {
 public:
  explicit CertificationError(const std::string& what)
      : Error(ExitCode::kCertification, what) {}
};

}  // namespace instanton
