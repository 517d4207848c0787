#ifndef RQCODES_ERRORS_HPP
#define RQCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rqc {

// Bad user-supplied parameters (CLI exit 2).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A guard refused to run an enumeration that would be too large (CLI exit 3).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rqc

#endif
