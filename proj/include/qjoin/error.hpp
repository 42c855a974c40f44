#pragma once

#include <stdexcept>
#include <string>

namespace qjoin {

// Precondition or domain violation. CLI maps this to exit code 3.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text or file. CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solve ran out of budget. Carries the best state reached so the
// caller can distinguish "numerically hard" from "probably infeasible"; the
// library itself never claims infeasibility from this alone. CLI exit code 4.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double best_residual, double best_margin)
        : std::runtime_error(what), best_residual(best_residual), best_margin(best_margin) {}

    double best_residual = 0.0;
    double best_margin = 0.0;
};

} // namespace qjoin
