#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratginv {

// Shape of an operand does not fit the operation.
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Division by the zero rational function (or zero rational).
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Evaluation of a rational function at a root of its denominator.
struct PoleAtPoint : std::domain_error {
    explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

// Exact inversion hit rank < n.
struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

// A matrix handed to the PSD factorizer was not a Gram matrix.
struct NotPSD : std::domain_error {
    explicit NotPSD(const std::string& what) : std::domain_error(what) {}
};

// The generalized-inverse representations need rank >= 1.
struct RankZero : std::domain_error {
    explicit RankZero(const std::string& what) : std::domain_error(what) {}
};

// Floating-point pipeline failure (singular Gram inversion and friends).
struct NumericFailure : std::runtime_error {
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

// Unknown test-matrix family name.
struct UnknownFamily : std::invalid_argument {
    explicit UnknownFamily(const std::string& what) : std::invalid_argument(what) {}
};

// Expression or matrix-file syntax error; position is a byte offset into the input.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// A literal division by a zero polynomial inside a parsed expression.
struct PoleError : std::runtime_error {
    std::size_t position;
    PoleError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// A matrix-file row with the wrong number of cells.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ratginv
