#pragma once

#include <stdexcept>
#include <string>

namespace hypervar {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed term, identity, hypersubstitution, model or variety text.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! A configured size guard was exceeded (model size, free rank, product
  //! size, congruence instances, variable count).
  class LimitError : public Error {
   public:
    using Error::Error;
  };

  //! Operation called on arguments that violate its precondition, e.g.
  //! mismatched signatures.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace hypervar
