#ifndef CTRANS_TYPES_HPP
#define CTRANS_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ctrans {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Default node count for every quadrature-backed operation; callers may
// override per call.
inline constexpr int kDefaultNodes = 512;

// Evaluations closer to a carrier than guard_factor * (node spacing) are
// refused rather than silently computed.
inline constexpr double kGuardFactor = 2.0;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

// A singularity (pole or carrier of a referenced measure) sits closer to a
// contour or evaluation point than the guard distance allows.
struct GuardDistanceError : Error {
    using Error::Error;
};

// transform() hit the guard distance at a specific component; transform_grid
// turns this into a reliability flag.
struct UnreliablePointError : GuardDistanceError {
    UnreliablePointError(const std::string& what, int component)
        : GuardDistanceError(what), component_index(component) {}
    int component_index;
};

// Expression evaluation failed (division by zero, pole hit at a node).
struct EvalError : Error {
    using Error::Error;
};

// Two independent computations of the same quantity disagree.
struct InconsistencyError : Error {
    using Error::Error;
};

// A measure reference could not be resolved, or resolving it would cycle.
struct LinkError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, int line_, int column_)
        : Error(what), line(line_), column(column_) {}
    int line;
    int column;
};

// Input document violates the measure-spec JSON schema.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace ctrans

#endif
