#ifndef KAUFFMAN_ERRORS_HPP_
#define KAUFFMAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kauffman {

  // Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed word text or an index outside [1, n - 1].
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A word that was required to be in Jones normal form is not.
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  // A planar diagram failed validation (not a perfect matching, crossing
  // chords, index out of range).
  class DiagramError : public Error {
   public:
    using Error::Error;
  };

  // Normalization ran past its step bound. The rewriting system terminates,
  // so this always indicates a bug.
  class FuelExhausted : public Error {
   public:
    using Error::Error;
  };

  class NotAMember : public Error {
   public:
    using Error::Error;
  };

  // A certificate or table failed its check against the diagram model.
  class VerificationFailed : public Error {
   public:
    using Error::Error;
  };

  // An exhaustive search was requested beyond its configured bound.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace kauffman

#endif  // KAUFFMAN_ERRORS_HPP_
