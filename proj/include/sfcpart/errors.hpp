#pragma once

#include <stdexcept>
#include <string>

namespace sfcpart {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters: bad level, bad rank count, degenerate extents, ...
class config_error : public error {
public:
    using error::error;
};

/// A coordinate outside the open unit cube was passed to an encoder.
class domain_error : public error {
public:
    using error::error;
};

/// Malformed input file. Carries the 1-based line number when known.
class parse_error : public error {
public:
    parse_error(const std::string& what, long line = 0)
        : error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    long line() const { return line_; }

private:
    long line_ = 0;
};

/// A violated internal invariant, e.g. duplicate curve keys after keying.
class internal_error : public error {
public:
    using error::error;
};

} // namespace sfcpart
