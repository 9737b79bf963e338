#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `offset` is the byte position of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at byte " + std::to_string(offset) + ")"), message_(message), offset_(offset) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded (enumeration, deletion-contraction).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace chroma
