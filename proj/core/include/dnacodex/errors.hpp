#pragma once

#include <stdexcept>
#include <string>

namespace dnacodex {

enum class Errc {
  InvalidSymbol,
  EmptyInput,
  LengthMismatch,
  InvalidParams,
  Exhausted,
  TooLarge,
  ParseError,
  MissingHeader,
  IndexOutOfRange,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidSymbol: return "InvalidSymbol";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::Exhausted: return "Exhausted";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::MissingHeader: return "MissingHeader";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "UnknownError";
}

}  // namespace dnacodex
