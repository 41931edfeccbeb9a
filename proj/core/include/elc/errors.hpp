#ifndef ELC_ERRORS_HPP_
#define ELC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace elc {

// Base class for every error raised by the library. The message is a single
// line so the CLI can forward it verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated (vertex out of range, pair is
// not an edge, malformed text, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when an orbit or classification is requested for a disconnected
// graph. Carries the 0-based vertex sets of the components.
class DisconnectedGraph : public Error {
 public:
  explicit DisconnectedGraph(std::vector<std::vector<int>> components);

  const std::vector<std::vector<int>>& components() const {
    return components_;
  }

 private:
  std::vector<std::vector<int>> components_;
};

// An enumeration guard (orbit size cap, 2^k codeword limit, C(n,k) subset
// limit, census n limit) would be exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace elc

#endif  // ELC_ERRORS_HPP_
