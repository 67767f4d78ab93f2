#pragma once

#include <stdexcept>
#include <string>

namespace paracalc {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; carries 1-based line/column of the offending token.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

// Division by an expression whose canonical form is the zero constant.
struct DivisionByZeroError : Error {
    using Error::Error;
};

// sin/cos/exp applied to an argument outside the supported atom class.
struct UnsupportedExpressionError : Error {
    using Error::Error;
};

// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

// Tensor operands living on different charts.
struct ChartMismatchError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Numeric evaluation failed (pole at every retry, non-finite value, ...).
struct EvalError : Error {
    using Error::Error;
};

// A checker was invoked on data violating its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace paracalc
