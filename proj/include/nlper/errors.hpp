#pragma once

#include <stdexcept>
#include <string>

namespace nlper {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can separate domain errors from programming bugs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define NLPER_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

NLPER_DEFINE_ERROR(EmptyPolyomino);
NLPER_DEFINE_ERROR(DuplicateCell);
NLPER_DEFINE_ERROR(InvalidShapeSpec);
NLPER_DEFINE_ERROR(DivergentParameter);
NLPER_DEFINE_ERROR(WindowTooSmall);
NLPER_DEFINE_ERROR(StripNotFound);
NLPER_DEFINE_ERROR(CollisionWithOccupiedCells);
NLPER_DEFINE_ERROR(PreconditionViolated);
NLPER_DEFINE_ERROR(NonTermination);
NLPER_DEFINE_ERROR(NoTwoShapes);
NLPER_DEFINE_ERROR(HypothesisViolated);
NLPER_DEFINE_ERROR(AreaTooLarge);
NLPER_DEFINE_ERROR(AmbiguousMax);
NLPER_DEFINE_ERROR(PolyominoTooLargeForTorus);
NLPER_DEFINE_ERROR(ParseError);
NLPER_DEFINE_ERROR(InvalidArgument);

#undef NLPER_DEFINE_ERROR

// Raised by verify_theorem when a polyomino outside the minimizer orbits
// attains the minimum. It carries the offending shape in text form.
class TheoremViolation : public Error {
public:
    TheoremViolation(const std::string& what, std::string shape)
        : Error(what), shape_(std::move(shape)) {}
    const std::string& shape() const { return shape_; }

private:
    std::string shape_;
};

}  // namespace nlper
