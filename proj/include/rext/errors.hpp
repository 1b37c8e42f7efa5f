#pragma once

#include <stdexcept>
#include <string>

namespace rext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REXT_DEFINE_ERROR(Name)                         \
  class Name : public Error {                           \
   public:                                              \
    explicit Name(const std::string& what)              \
        : Error(std::string(#Name ": ") + what) {}      \
  }

// ratpoly
REXT_DEFINE_ERROR(ZeroDenominator);
REXT_DEFINE_ERROR(PoleEvaluation);
REXT_DEFINE_ERROR(DomainError);
// susy / models
REXT_DEFINE_ERROR(InvalidAlpha);
REXT_DEFINE_ERROR(SeedHasInteriorZero);
REXT_DEFINE_ERROR(OddMOnFullLine);
REXT_DEFINE_ERROR(OddM2);
REXT_DEFINE_ERROR(NonPositiveEnergy);
REXT_DEFINE_ERROR(IrrationalRatioUnsupported);
REXT_DEFINE_ERROR(InvalidSpec);
// numeric
REXT_DEFINE_ERROR(PotentialPoleOnGrid);
REXT_DEFINE_ERROR(ConvergenceFailure);

#undef REXT_DEFINE_ERROR

}  // namespace rext
