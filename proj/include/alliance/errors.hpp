#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace alliance {

// Input text could not be decoded. Carries the byte offset (graph6) or the
// 1-based line number (edge list) of the offending input when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what,
                        std::optional<std::size_t> byte_offset = std::nullopt,
                        std::optional<int> line = std::nullopt)
        : std::runtime_error(what), byte_offset(byte_offset), line(line) {}

    std::optional<std::size_t> byte_offset;
    std::optional<int> line;
};

// Instance is structurally out of range for an encoding or a fixed-width set.
class UnsupportedSize : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A solver refused to run because the instance exceeds its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DisconnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace alliance
