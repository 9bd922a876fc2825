#pragma once

#include <stdexcept>
#include <string>

namespace hermlift {

enum class Errc {
  NonPrime,
  TooLarge,
  DivisionByZero,
  DivisionByZeroPoly,
  DuplicateNode,
  TangentLine,
  ExponentOutOfRange,
  EvenPrime,
  RankDeficient,
  TooLargeToEnumerate,
  LengthMismatch,
  NotARecoverySet,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hermlift
