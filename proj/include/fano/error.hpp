#pragma once

#include <stdexcept>
#include <string>

namespace fano {

// Base class for every error raised by the library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Lexical or syntactic failure with a source position (1-based).
struct parse_error : error {
  int line;
  int column;
  parse_error(const std::string& what, int line_, int column_)
      : error(what + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_),
        column(column_) {}
};

}  // namespace fano
