#ifndef HNS_ERRORS_HPP
#define HNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hns {

/// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (out-of-range index,
/// non-invariant input to fold, mismatched systems, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Brute-force search requested beyond its configured dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized table.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hns

#endif  // HNS_ERRORS_HPP
