#pragma once

#include <stdexcept>
#include <string>

namespace rocopula {

// Bad parameters or preconditions (parameter outside its family domain,
// probability outside (0,1), threshold ordering). CLI exit code 2.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or unusable input data (CSV schema, missing scores, empty class).
// CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Correlation requested on zero-variance input.
class UndefinedCorrelationError : public DataError {
public:
    explicit UndefinedCorrelationError(const std::string& what) : DataError(what) {}
};

// Non-convergence, out-of-tolerance quadrature, or fit without admissible root.
// CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class FitError : public NumericError {
public:
    explicit FitError(const std::string& what) : NumericError(what) {}
};

}  // namespace rocopula
