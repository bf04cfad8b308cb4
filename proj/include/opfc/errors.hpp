#ifndef OPFC_ERRORS_HPP
#define OPFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opfc {

// Bad data fed to an operation (non-finite entries, non-unitary input, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration or parameter value (p < 1, infeasible rank, ...).
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// A decomposition or quadrature failed to reach its accuracy target.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Evaluation requested outside a function's working interval.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace opfc

#endif
