#include "diagprop/errors.hpp"

namespace diagprop {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case Errc::RewriteBudgetExceeded: return "RewriteBudgetExceeded";
    case Errc::FundamentalMonomialReducible: return "FundamentalMonomialReducible";
    case Errc::OddGeneratorDegree: return "OddGeneratorDegree";
    case Errc::InvalidPresentation: return "InvalidPresentation";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NotTopDegree: return "NotTopDegree";
    case Errc::NoCompanionRing: return "NoCompanionRing";
    case Errc::NotKunnethRing: return "NotKunnethRing";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::InvalidClassVector: return "InvalidClassVector";
    case Errc::MissingGeneratorImage: return "MissingGeneratorImage";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::BadM: return "BadM";
    case Errc::MissingFlag: return "MissingFlag";
    case Errc::UnsupportedSpec: return "UnsupportedSpec";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::ContradictoryFlags: return "ContradictoryFlags";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::UsageError: return "UsageError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace diagprop
