#pragma once

#include <stdexcept>
#include <string>

namespace icosa {

// Base for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ICOSA_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

ICOSA_DEFINE_ERROR(NotProportional);
ICOSA_DEFINE_ERROR(ClosureOverflow);
ICOSA_DEFINE_ERROR(RootFindingFailure);
ICOSA_DEFINE_ERROR(SingularSystem);
ICOSA_DEFINE_ERROR(DivisionNearZero);
ICOSA_DEFINE_ERROR(RootCountMismatch);
ICOSA_DEFINE_ERROR(OrbitSizeError);
ICOSA_DEFINE_ERROR(Unclassifiable);
ICOSA_DEFINE_ERROR(NotFound);
ICOSA_DEFINE_ERROR(Inconclusive);
ICOSA_DEFINE_ERROR(PartitionFailure);
ICOSA_DEFINE_ERROR(NonConvergence);

#undef ICOSA_DEFINE_ERROR

}  // namespace icosa
