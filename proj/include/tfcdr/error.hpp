#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfcdr {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. Γ at x ≤ 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters or violated preconditions of a public contract.
class ContractError : public Error {
public:
    using Error::Error;
};

/// A half-step history does not contain the levels an operator needs.
class HistoryError : public Error {
public:
    using Error::Error;
};

/// A five-point stencil was requested too close to the boundary.
class StencilRangeError : public Error {
public:
    using Error::Error;
};

/// Two grid vectors (or a vector and its grid) disagree in length.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// The banded factorization met a zero pivot.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, std::size_t row)
        : Error(what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// A linear solve failed while marching; carries the full-step index.
class SolverError : public Error {
public:
    SolverError(const std::string& what, std::size_t step)
        : Error(what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// The reference quadrature did not reach its tolerance.
class OracleError : public Error {
public:
    OracleError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}

    double achieved_tolerance() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Malformed configuration file, expression, or CLI option.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace tfcdr
