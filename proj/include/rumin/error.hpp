#pragma once

#include <stdexcept>
#include <string>

namespace rumin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RUMIN_DEFINE_ERROR(Name)                                                                   \
    class Name : public Error {                                                                    \
    public:                                                                                        \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}                      \
    }

RUMIN_DEFINE_ERROR(DivisionByZero);
RUMIN_DEFINE_ERROR(DenominatorVanishes);
RUMIN_DEFINE_ERROR(UnboundParameter);
RUMIN_DEFINE_ERROR(ParseError);
RUMIN_DEFINE_ERROR(DegreeOutOfRange);
RUMIN_DEFINE_ERROR(AlgebraMismatch);
RUMIN_DEFINE_ERROR(InvalidAlgebra);
RUMIN_DEFINE_ERROR(ShapeMismatch);
RUMIN_DEFINE_ERROR(NotUnipotent);
RUMIN_DEFINE_ERROR(InternalCheckFailed);
RUMIN_DEFINE_ERROR(NotAlgebraic);
RUMIN_DEFINE_ERROR(NotSymmetric);
RUMIN_DEFINE_ERROR(EigenvaluesNotInField);
RUMIN_DEFINE_ERROR(RouteDisagreement);
RUMIN_DEFINE_ERROR(WeightCheckFailed);
RUMIN_DEFINE_ERROR(VerificationFailed);
RUMIN_DEFINE_ERROR(UnknownOperator);

#undef RUMIN_DEFINE_ERROR

} // namespace rumin
