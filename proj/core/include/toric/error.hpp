#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad arity, empty support, unparsable text.
/// The command-line front end maps it to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical failure: division by zero, degenerate supports, a random
/// choice that turned out not to be generic. Maps to exit status 1.
class MathError : public Error {
 public:
  using Error::Error;
};

/// Failure modes of the randomized pipeline that are cured by redrawing one
/// of the random vectors.
enum class GenericityIssue {
  kLambdaNotSeparating,
  kNonGenericInput,
  kSingularJacobian,
  kNoValidApproximant,
  kMuNotPrimitive,
  kVerificationFailed,
};

const char* to_string(GenericityIssue issue);

class GenericityError : public MathError {
 public:
  GenericityError(GenericityIssue issue, const std::string& detail)
      : MathError(std::string(to_string(issue)) + (detail.empty() ? "" : ": " + detail)),
        issue_(issue) {}

  GenericityIssue issue() const noexcept { return issue_; }

 private:
  GenericityIssue issue_;
};

/// Raised once the retry budget for redrawing random choices is spent.
class GenericityFailure : public MathError {
 public:
  explicit GenericityFailure(const std::string& detail) : MathError("genericity failure: " + detail) {}
};

}  // namespace toric
