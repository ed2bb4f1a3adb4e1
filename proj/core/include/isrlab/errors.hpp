#pragma once

#include <stdexcept>
#include <string>

namespace isrlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ISRLAB_ERROR(Name)                 \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

ISRLAB_ERROR(SingularMatrix)
ISRLAB_ERROR(RangeTooLarge)
ISRLAB_ERROR(IdentityInput)
ISRLAB_ERROR(DimensionOutOfRange)
ISRLAB_ERROR(FamilyMismatch)
ISRLAB_ERROR(GroupTooLarge)
ISRLAB_ERROR(NotSymmetric)
ISRLAB_ERROR(HypothesisViolated)
ISRLAB_ERROR(BlockNotInvariant)
ISRLAB_ERROR(WindowNotNormalized)
ISRLAB_ERROR(ModulusOutOfRange)
ISRLAB_ERROR(ParseError)
ISRLAB_ERROR(UnknownSuite)

#undef ISRLAB_ERROR

}  // namespace isrlab
