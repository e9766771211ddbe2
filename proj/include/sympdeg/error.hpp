#pragma once

#include <stdexcept>
#include <string>

namespace sympdeg {

/// Base class of every domain error raised by the library. `name()` is the
/// stable identifier printed by the command-line front end.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SYMPDEG_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(#Name, what) {}    \
    }

SYMPDEG_DEFINE_ERROR(InvalidSegment);
SYMPDEG_DEFINE_ERROR(InvalidRankSequence);
SYMPDEG_DEFINE_ERROR(MismatchedQuiver);
SYMPDEG_DEFINE_ERROR(InvalidMove);
SYMPDEG_DEFINE_ERROR(InsufficientMultiplicity);
SYMPDEG_DEFINE_ERROR(NoEmbedding);
SYMPDEG_DEFINE_ERROR(NotComparable);
SYMPDEG_DEFINE_ERROR(NotSplitType);
SYMPDEG_DEFINE_ERROR(MismatchedType);
SYMPDEG_DEFINE_ERROR(NotEpsilon);
SYMPDEG_DEFINE_ERROR(InvalidType);
SYMPDEG_DEFINE_ERROR(InstanceTooLarge);
SYMPDEG_DEFINE_ERROR(Infeasible);
SYMPDEG_DEFINE_ERROR(InvalidWord);
SYMPDEG_DEFINE_ERROR(InvalidSubset);
SYMPDEG_DEFINE_ERROR(ParseError);

// Raised when a computed result contradicts an invariant the library
// checks inline (e.g. the rank-delta pattern of a move). Never expected.
SYMPDEG_DEFINE_ERROR(InvariantViolation);

#undef SYMPDEG_DEFINE_ERROR

}  // namespace sympdeg
