#pragma once

#include <stdexcept>
#include <string>

namespace cslkit {

/// Thrown when an input violates a documented precondition or schema.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Thrown when a numerical routine cannot reach its accuracy target
/// (quadrature non-convergence, singular systems, failed fits).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw validation_error(msg);
}

} // namespace cslkit
