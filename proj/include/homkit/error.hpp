#pragma once

#include <stdexcept>
#include <string>

namespace homkit {

// Library errors carry a kind so callers (notably the CLI) can map them to
// exit codes and distinguish "antipode not invertible" from bad input.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    input,         // malformed data, shape mismatch, bad parameters
    precondition,  // operation called on an unverified/unsuitable structure
    singular,      // a map that must be invertible is not (e.g. antipode)
    structural,    // an identity the theory guarantees failed to hold
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace homkit
