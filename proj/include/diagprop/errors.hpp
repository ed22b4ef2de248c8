#ifndef DIAGPROP_ERRORS_HPP
#define DIAGPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diagprop {

/* Every failure the toolkit can signal, one code per condition so tests and
 * the CLI can dispatch on the reason rather than on message text. */
enum class Errc {
  // ring construction and arithmetic
  NonHomogeneousRelation,
  RewriteBudgetExceeded,
  FundamentalMonomialReducible,
  OddGeneratorDegree,
  InvalidPresentation,
  RingMismatch,
  NotTopDegree,
  NoCompanionRing,
  NotKunnethRing,
  // characteristic classes
  DimensionTooLarge,
  DimensionMismatch,
  ParityViolation,
  InvalidClassVector,
  // Steenrod square data
  MissingGeneratorImage,
  DegreeMismatch,
  BadM,
  // verdict engine
  MissingFlag,
  UnsupportedSpec,
  WrongDimension,
  ContradictoryFlags,
  // input handling
  SyntaxError,
  UnknownKind,
  UsageError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace diagprop

#endif
