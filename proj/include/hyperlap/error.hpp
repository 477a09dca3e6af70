#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlap {

enum class Errc {
  InvalidArgument,
  SingletonHyperedge,
  OutOfRangeVertex,
  NonPositiveWeight,
  IsolatedVertex,
  LengthMismatch,
  NotSymmetric,
  NoConvergence,
  KTooLarge,
  DegenerateSpectrum,
  EmptyTrainingSet,
  SingularSystem,
  MalformedRow,
  InconsistentWidth,
  EmptyFile,
  InsufficientClassSize,
  Io,
};

std::string_view to_string(Errc code) noexcept;

// Numerical failures map to CLI exit code 2, everything else to 1.
constexpr bool is_numerical(Errc code) noexcept {
  return code == Errc::NotSymmetric || code == Errc::NoConvergence ||
         code == Errc::DegenerateSpectrum || code == Errc::SingularSystem;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyperlap
