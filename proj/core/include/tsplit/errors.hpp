#ifndef TSPLIT_ERRORS_HPP
#define TSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsplit {

// Bad input or out-of-domain parameters. The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A computed certificate did not hold. The CLI maps this to exit code 3.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tsplit

#endif
