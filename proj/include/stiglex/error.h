#ifndef STIGLEX_ERROR_H_
#define STIGLEX_ERROR_H_

#include <stdexcept>
#include <string>

namespace stiglex {

// Base of every error raised by the library. Data and configuration problems
// derive from DataError; broken preconditions and internal invariants derive
// from ContractError. The CLI maps the two families to exit codes 1 and 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

// A required input file is missing or unreadable.
class LoadError : public DataError {
 public:
  using DataError::DataError;
};

// Malformed input. Carries the file name and 1-based line number when known.
class ParseError : public DataError {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what);

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Input is syntactically valid but internally inconsistent (dangling
// references, cycles, conflicting labels).
class IntegrityError : public DataError {
 public:
  using DataError::DataError;
};

// Input violates a content rule: empty term, empty lexicon, unknown
// exclusion, duplicate ids.
class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

// Caller-supplied records are inconsistent, e.g. duplicate document ids.
class InputError : public DataError {
 public:
  using DataError::DataError;
};

class ConfigError : public DataError {
 public:
  using DataError::DataError;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

// Path operation requested for a part of speech without a hypernym taxonomy.
class UnsupportedPosError : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace stiglex

#endif  // STIGLEX_ERROR_H_
