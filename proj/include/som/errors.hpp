#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace som {

// Base of every error thrown by the library. The CLI maps the concrete
// type onto an exit code (see tools/som_cli.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Neuron index or grid coordinate outside the lattice.
class IndexError : public Error {
public:
    using Error::Error;
};

// Vector or dataset dimensionality disagrees with the model.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Invalid parameter value (learning rate, radius, split fraction, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Dataset content violates a precondition (empty, unlabeled, non-finite).
class DataError : public Error {
public:
    using Error::Error;
};

// Malformed CSV or model file. line() is 1-based, 0 when not applicable.
class ParseError : public DataError {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : DataError(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Operation requested on an object that lacks the required state
// (e.g. predicting with a model that has no label map).
class StateError : public Error {
public:
    using Error::Error;
};

} // namespace som
