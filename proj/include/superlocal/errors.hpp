#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superlocal {

/// Malformed textual input (graph6, multigraph format, CLI arguments).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An argument outside an operation's domain (non-adjacent pair, invalid id, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact method refused because its input exceeds the configured limit.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A proven guarantee failed to hold. Always an implementation bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace superlocal
