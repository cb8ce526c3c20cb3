#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commlab {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A precondition on a value was violated (bad element, wrong arity, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A u_pqr symbol was requested for a triple that is not in the signature.
  class SignatureError : public Error {
   public:
    using Error::Error;
  };

  // A variable was read that the assignment does not bind.
  class UnboundVariable : public Error {
   public:
    using Error::Error;
  };

  // A configured resource cap was exceeded.
  class BudgetError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  // An internal consistency check failed; indicates a bug in the engine.
  class InvariantError : public Error {
   public:
    using Error::Error;
  };

}  // namespace commlab
