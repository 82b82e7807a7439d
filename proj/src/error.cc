#include "stiglex/error.h"

#include <utility>

namespace stiglex {

ParseError::ParseError(std::string file, std::size_t line,
                       const std::string& what)
    : DataError(file + ":" + std::to_string(line) + ": " + what),
      file_(std::move(file)),
      line_(line) {}

}  // namespace stiglex
