#include "hyperlap/error.hpp"

namespace hyperlap {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SingletonHyperedge: return "SingletonHyperedge";
    case Errc::OutOfRangeVertex: return "OutOfRangeVertex";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::DegenerateSpectrum: return "DegenerateSpectrum";
    case Errc::EmptyTrainingSet: return "EmptyTrainingSet";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::MalformedRow: return "MalformedRow";
    case Errc::InconsistentWidth: return "InconsistentWidth";
    case Errc::EmptyFile: return "EmptyFile";
    case Errc::InsufficientClassSize: return "InsufficientClassSize";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace hyperlap
