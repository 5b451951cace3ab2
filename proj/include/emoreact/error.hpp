#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace emoreact {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration or reference data (lexicon, tables, config file).
class ConfigError : public Error {
public:
    using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Input data violates an operation's precondition.
class DataError : public Error {
public:
    using Error::Error;
};

// Non-fatal findings collected while a stage runs. Errors here mean some
// unit of work (a record, a category) was skipped; warnings are informative.
struct Diagnostics {
    std::vector<std::string> warnings;
    std::vector<std::string> errors;

    void warn(std::string message) { warnings.push_back(std::move(message)); }
    void error(std::string message) { errors.push_back(std::move(message)); }
    bool has_errors() const { return !errors.empty(); }

    void merge(const Diagnostics& other) {
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
        errors.insert(errors.end(), other.errors.begin(), other.errors.end());
    }
};

} // namespace emoreact
