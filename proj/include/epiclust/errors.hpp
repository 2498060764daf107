#pragma once

#include <stdexcept>
#include <string>

namespace epiclust {

// Bad algorithm parameters or flag combinations. The CLI maps this to exit 2.
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Structurally unusable input: empty point sets, length mismatches,
// non-finite coordinates. The CLI maps this to exit 3.
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Filesystem failures: missing files, unwritable paths. Exit 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file contents: schema violations, unparsable rows, duplicate ids.
// Exit 3 for data files, exit 2 when the offender is a synth config.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace epiclust
