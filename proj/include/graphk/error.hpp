#ifndef GRAPHK_ERROR_HPP_
#define GRAPHK_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphk {

// Invalid input data: malformed files, violated preconditions.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error with a position in the offending text.
struct ParseError : DataError {
  ParseError(const std::string& what, size_t position)
      : DataError(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  size_t pos;
};

// A configured computational limit was exceeded (step bounds, caps).
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace graphk

#endif  // GRAPHK_ERROR_HPP_
