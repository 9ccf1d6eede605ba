#ifndef CLC_ERRORS_HPP
#define CLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clc {

/// Base class for all library errors. `name()` is the stable machine-readable
/// identifier that the CLI propagates verbatim.
class Error : public std::runtime_error {
   public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

   private:
    std::string name_;
};

#define CLC_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                           \
       public:                                                            \
        explicit NAME(const std::string& detail) : Error(#NAME, detail) {} \
    }

CLC_DEFINE_ERROR(NonPrimeCharacteristic);
CLC_DEFINE_ERROR(TowerMismatch);
CLC_DEFINE_ERROR(FieldTooLarge);
CLC_DEFINE_ERROR(DivisionByZero);
CLC_DEFINE_ERROR(ContextMismatch);
CLC_DEFINE_ERROR(NoTowerDeclared);
CLC_DEFINE_ERROR(ArgNotInSubfield);
CLC_DEFINE_ERROR(DivisionByZeroPoly);
CLC_DEFINE_ERROR(EnumerationBudgetExceeded);
CLC_DEFINE_ERROR(ClassReductionUnsound);
CLC_DEFINE_ERROR(PointNotOnCurve);
CLC_DEFINE_ERROR(InvalidExtensionDegree);
CLC_DEFINE_ERROR(DegeneratePlan);
CLC_DEFINE_ERROR(LocalityUnsatisfiable);
CLC_DEFINE_ERROR(LengthMismatch);
CLC_DEFINE_ERROR(IndexOutOfRange);
CLC_DEFINE_ERROR(NoViableLine);
CLC_DEFINE_ERROR(BoundViolated);
CLC_DEFINE_ERROR(BadSpec);

#undef CLC_DEFINE_ERROR

}  // namespace clc

#endif
