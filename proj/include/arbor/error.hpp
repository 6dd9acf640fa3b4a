#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arbor {

// All failures surface as an Error subclass whose name() is the violated
// precondition; the CLI prints it verbatim so scripts can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg.empty() ? name : name + ": " + msg),
          name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define ARBOR_DEFINE_ERROR(NAME)                                           \
    class NAME : public Error {                                            \
    public:                                                                \
        explicit NAME(const std::string& msg = "") : Error(#NAME, msg) {}  \
    }

ARBOR_DEFINE_ERROR(InconsistentRotation);
ARBOR_DEFINE_ERROR(EulerMismatch);
ARBOR_DEFINE_ERROR(NonSimple);
ARBOR_DEFINE_ERROR(NotATriangulation);
ARBOR_DEFINE_ERROR(CannotTriangulateSimply);
ARBOR_DEFINE_ERROR(ParseError);
ARBOR_DEFINE_ERROR(DeltaBelowDegree);
ARBOR_DEFINE_ERROR(NoConfigurationFound);
ARBOR_DEFINE_ERROR(TotalChargeMismatch);
ARBOR_DEFINE_ERROR(NotDegreeFour);
ARBOR_DEFINE_ERROR(PartialInput);
ARBOR_DEFINE_ERROR(DegeneracyTooHigh);
ARBOR_DEFINE_ERROR(TooLarge);
ARBOR_DEFINE_ERROR(DigonPresent);
ARBOR_DEFINE_ERROR(ExhaustedBeforeK);
ARBOR_DEFINE_ERROR(UnverifiedStep);
ARBOR_DEFINE_ERROR(ProjectiveNotTriangulable);
ARBOR_DEFINE_ERROR(InternalError);

#undef ARBOR_DEFINE_ERROR

}  // namespace arbor
