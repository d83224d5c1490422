#pragma once

#include <stdexcept>
#include <string>

namespace qgx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on length, size or alphabet.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A scalar argument is outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed input data (bad matrix, bad symbol, parse failure).
class InputError : public Error {
public:
    using Error::Error;
};

/// The group is too large to enumerate; use a representation-specific normalizer.
class OrbitTooLargeError : public Error {
public:
    using Error::Error;
};

/// An exhaustive routine was asked for an instance above its size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// Invalid GA configuration or unsupported family/mode combination.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace qgx
