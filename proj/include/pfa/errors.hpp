#ifndef PFA_ERRORS_HPP
#define PFA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfa {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Unknown magic / wrong codec for the file that was supplied.
struct UnsupportedFormat : IoError {
    explicit UnsupportedFormat(const std::string& msg) : IoError(msg) {}
};

// Structurally broken file: bad header fields, truncated payload.
struct FormatError : IoError {
    explicit FormatError(const std::string& msg) : IoError(msg) {}
};

// Extra bytes after the last valid entry of a container.
struct TrailingBytes : FormatError {
    explicit TrailingBytes(const std::string& msg) : FormatError(msg) {}
};

struct ChannelMismatch : Error {
    explicit ChannelMismatch(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Angle requested where (s1, s2) carries no orientation.
struct UndefinedAngle : DomainError {
    explicit UndefinedAngle(const std::string& msg) : DomainError(msg) {}
};

// Degenerate point configuration in a linear estimation problem.
struct RankDeficient : Error {
    explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace pfa

#endif
