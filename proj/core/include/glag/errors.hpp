// Exception types shared across the library.
#ifndef GLAG_ERRORS_HPP
#define GLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glag {

// Invalid argument or parameter outside the admissible domain.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// An iterative scheme failed to reach the requested tolerance.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

// A representation exists only for non-degenerate parameter combinations.
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace glag

#endif
