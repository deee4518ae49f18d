#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpistego {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to an otherwise well-defined operation (plane out of range,
/// length mismatch, position outside the image, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind {
    kMalformedHeader,
    kUnsupportedMaxval,
    kTruncatedPayload,
    kMalformedKey,
  };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Payload does not fit in the cover.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t requested, std::size_t available)
      : Error("payload " + std::to_string(requested) +
              " bits exceeds capacity " + std::to_string(available)),
        requested_(requested),
        available_(available) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t requested_;
  std::size_t available_;
};

/// A stego key that cannot describe the given stego image.
class InconsistentKey : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Too few usable histogram pairs for the chi-square attack.
class DegenerateHistogram : public Error {
 public:
  using Error::Error;
};

}  // namespace bpistego
