#pragma once

#include <stdexcept>
#include <string>

namespace leavitt {

// Parse failure with 1-based source location; shared by every text format the
// tool reads (quiver files, K-tables, raw matrices, group expressions).
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

}  // namespace leavitt
