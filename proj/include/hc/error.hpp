#ifndef HC_ERROR_HPP
#define HC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hc {

// Bad input: rejected polynomial, parse failure, cap exceeded. CLI exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant. CLI exit code 1.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hc

#endif
