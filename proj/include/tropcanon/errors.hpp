#pragma once

#include <stdexcept>
#include <string>

namespace tropcanon {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No transversal family of finite entries exists (tropical determinant is -inf),
/// or a row consists of -inf entries only.
struct InfeasibleCanon : Error {
    using Error::Error;
};

/// The transversal family handed to a canon algorithm does not realize a
/// maximal transversal sum (the iteration fails to stabilize within n sweeps).
struct NotMaximalFamily : Error {
    using Error::Error;
};

/// No canon satisfies the requested prescribed maxima / lower bounds.
struct NoSuchCanon : Error {
    using Error::Error;
};

struct NotACover : Error {
    using Error::Error;
};

struct NotMinimalCover : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct NonLinearSystem : Error {
    using Error::Error;
};

struct NonConstantCoefficients : Error {
    using Error::Error;
};

/// Syntax error with 1-based line/column position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

struct EvalError : Error {
    using Error::Error;
};

} // namespace tropcanon
