#pragma once

#include <stdexcept>
#include <string>

namespace curvop {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CURVOP_DEFINE_ERROR(Name)                 \
    class Name : public Error {                   \
    public:                                       \
        explicit Name(const std::string& what)    \
            : Error(#Name ": " + what) {}         \
    }

CURVOP_DEFINE_ERROR(ModeMismatch);
CURVOP_DEFINE_ERROR(ArityMismatch);
CURVOP_DEFINE_ERROR(DegreeMismatch);
CURVOP_DEFINE_ERROR(PositionOutOfRange);
CURVOP_DEFINE_ERROR(MalformedTree);
CURVOP_DEFINE_ERROR(UnknownGenerator);
CURVOP_DEFINE_ERROR(NameCollision);
CURVOP_DEFINE_ERROR(TruncationExceeded);
CURVOP_DEFINE_ERROR(NonMixedDifferential);
CURVOP_DEFINE_ERROR(NotClosed);
CURVOP_DEFINE_ERROR(NotSolvable);
CURVOP_DEFINE_ERROR(NotInImage);
CURVOP_DEFINE_ERROR(ConsistencyFailure);
CURVOP_DEFINE_ERROR(ImageEscapesSlice);
CURVOP_DEFINE_ERROR(NotAComplex);
CURVOP_DEFINE_ERROR(NilpotencyExceeded);
CURVOP_DEFINE_ERROR(UnboundGenerator);
CURVOP_DEFINE_ERROR(ParseError);
CURVOP_DEFINE_ERROR(InvalidArgument);

#undef CURVOP_DEFINE_ERROR

}  // namespace curvop
