#ifndef GRIDBOND_ERRORS_HPP
#define GRIDBOND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gridbond {

enum class Errc {
    invalid_argument,
    invalid_edge,
    no_edges,
    no_pair,
    parse_error,
    io_error,
    enumeration_incomplete,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace gridbond

#endif
