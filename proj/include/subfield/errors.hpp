#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subfield {

/// Violation of an operation's contract: value out of range, mismatched
/// radicands, division by zero, insufficient digits, and the like.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in a c-spec or serialized value; carries the byte offset
/// where scanning failed.
class parse_error : public domain_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : domain_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace subfield
