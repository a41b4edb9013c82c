#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace birank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid graph input: index out of range, bad weight, inconsistent relations.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Vector or matrix dimensions disagree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Parameter outside its documented domain.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Non-finite values, singular systems.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Application records that violate their contract (future timestamps, non-positive ratings, unknown ids).
class InputError : public Error {
public:
    using Error::Error;
};

/// Dense computation refused because the problem exceeds the configured size cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line number (0 when the whole file is at fault).
class ParseError : public Error {
public:
    ParseError(std::string path, std::size_t line, const std::string& what)
        : Error(format(path, line, what)), path_(std::move(path)), line_(line) {}

    const std::string& path() const noexcept { return path_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& path, std::size_t line, const std::string& what) {
        if (line == 0) {
            return path + ": " + what;
        }
        return path + ":" + std::to_string(line) + ": " + what;
    }

    std::string path_;
    std::size_t line_;
};

}  // namespace birank
