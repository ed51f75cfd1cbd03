#pragma once

#include "starramsey/core.hpp"

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

namespace starramsey {

/// Malformed coloring file; `line` is 1-based (0 for end-of-file problems).
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

private:
  int line_;
};

/// "p t" header, then one "u v c" line per edge in lexicographic order.
/// `comments` are written first, each prefixed with "# ".
std::string serialize_coloring(const EdgeColoring& coloring,
                               std::span<const std::string> comments = {});

/// Lines starting with '#' are ignored. Throws ParseError.
EdgeColoring parse_coloring(std::istream& in);
EdgeColoring parse_coloring(const std::string& text);

} // namespace starramsey
