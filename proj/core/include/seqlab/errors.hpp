#ifndef SEQLAB_ERRORS_HPP
#define SEQLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seqlab {

// Base class for all errors raised by the library. The CLI maps subclasses
// onto process exit codes (usage 2, data 3, numeric 4).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible shapes in a numeric operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Out-of-range index (vocabulary id, position beyond the table).
class IndexError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries a line number where available.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Inputs are well-formed but mutually inconsistent (offset/surface
// mismatches, token alignment failures, missing lookup keys).
class DataError : public Error {
 public:
  using Error::Error;
};

// File container problems: bad magic, version, truncation, checksum.
class IoError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf where a finite value is required, training divergence.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration or command-line usage.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqlab

#endif  // SEQLAB_ERRORS_HPP
