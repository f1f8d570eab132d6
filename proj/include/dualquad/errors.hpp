#pragma once

#include <stdexcept>
#include <string>

namespace dualquad {

// Base of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrangle with collinear successive edges (this includes zero-length
// edges). Such inputs have no well-defined dual.
struct DegenerateInput : Error {
    using Error::Error;
};

// The construction produced a degenerate dual. This cannot happen for the
// inputs we accept, so it is reported loudly instead of silently ignored.
struct DegenerateDual : Error {
    using Error::Error;
};

// Side lengths / angle data passed to a closed-form evaluation are not
// consistent with the requested shape class.
struct InvalidClass : Error {
    using Error::Error;
};

// The compass construction is only defined for convex inputs.
struct NotConvex : Error {
    using Error::Error;
};

// The compass circles failed to intersect where they must.
struct ConstructionFailure : Error {
    using Error::Error;
};

// Interpolation hit a degenerate quadrangle at parameter t.
struct DegenerateAtT : Error {
    DegenerateAtT(double t_, double margin_, const std::string& what_)
        : Error(what_), t(t_), margin(margin_) {}
    double t;
    double margin;
};

// Input text is not syntactically a quadrangle document.
struct ParseError : Error {
    using Error::Error;
};

// Input text parsed but violates a document invariant.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace dualquad
