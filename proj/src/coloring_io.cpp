#include "starramsey/coloring_io.hpp"

#include "starramsey/verify.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

namespace starramsey {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

std::string serialize_coloring(const EdgeColoring& coloring, std::span<const std::string> comments) {
  std::ostringstream os;
  for (const auto& c : comments)
    os << "# " << c << '\n';
  os << coloring.order() << ' ' << coloring.colors() << '\n';
  const auto colors = coloring.edge_colors();
  std::size_t i = 0;
  for (int u = 1; u <= coloring.order(); ++u)
    for (int v = u + 1; v <= coloring.order(); ++v)
      os << u << ' ' << v << ' ' << colors[i++] << '\n';
  return os.str();
}

namespace {

// Splits on single spaces; empty fields (double or edge spaces) are errors.
std::optional<std::vector<int>> parse_fields(std::string_view line, std::size_t expected) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(' ', start);
    const std::string_view tok = line.substr(start, end == std::string_view::npos ? end : end - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      return std::nullopt;
    out.push_back(value);
    if (end == std::string_view::npos)
      break;
    start = end + 1;
  }
  if (out.size() != expected)
    return std::nullopt;
  return out;
}

} // namespace

EdgeColoring parse_coloring(std::istream& in) {
  std::optional<std::pair<int, int>> header;
  std::vector<ColoredEdge> edges;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (!line.empty() && line.front() == '#')
      continue;
    if (!header) {
      const auto f = parse_fields(line, 2);
      if (!f)
        throw ParseError(line_no, "expected header \"p t\"");
      if ((*f)[0] < 1 || (*f)[1] < 1)
        throw ParseError(line_no, "header values must be positive");
      header.emplace((*f)[0], (*f)[1]);
      continue;
    }
    const auto f = parse_fields(line, 3);
    if (!f)
      throw ParseError(line_no, "expected edge line \"u v c\"");
    edges.push_back(ColoredEdge{(*f)[0], (*f)[1], (*f)[2], line_no});
  }
  if (!header)
    throw ParseError(0, "missing header \"p t\"");

  const auto defects = validate(header->first, header->second, edges);
  if (!defects.empty())
    throw ParseError(defects.front().line, defects.front().message);
  return assemble_coloring(header->first, header->second, edges);
}

EdgeColoring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  return parse_coloring(in);
}

} // namespace starramsey
