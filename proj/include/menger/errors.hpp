#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace menger {

  // Base class of everything the library throws on bad input or a failed
  // internal guarantee.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class IndexOutOfRange : public Error {
   public:
    using Error::Error;
  };

  class ShapeMismatch : public Error {
   public:
    using Error::Error;
  };

  class ClosureCapExceeded : public Error {
   public:
    explicit ClosureCapExceeded(std::size_t cap, std::string const& what)
        : Error(what + " (cap " + std::to_string(cap) + ")"), _cap(cap) {}

    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _cap;
  };

  class TranslationMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotClosed : public Error {
   public:
    using Error::Error;
  };

  class NotAnOrder : public Error {
   public:
    using Error::Error;
  };

  class NotSeparable : public Error {
   public:
    using Error::Error;
  };

  class DeterminingPairViolation : public Error {
   public:
    using Error::Error;
  };

  class ImageSplitsClasses : public Error {
   public:
    using Error::Error;
  };

  class BaseCollision : public Error {
   public:
    using Error::Error;
  };

  class FaithfulnessFailure : public Error {
   public:
    using Error::Error;
  };

  class VerificationFailed : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace menger
