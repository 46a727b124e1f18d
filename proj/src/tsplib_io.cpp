#include "tourlab/tsplib_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "text.hpp"

namespace tourlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line, bool allow_comma) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_sep = [&](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || (allow_comma && c == ',');
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<double> parse_real(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> parse_count(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string at_line(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

bool is_section_keyword(std::string_view token) {
  return token.size() > 8 && token.substr(token.size() - 8) == "_SECTION";
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line ? at_line(line, what) : what), kind_(kind), line_(line) {}

TsplibDocument parse_tsplib(std::string_view text, Metric metric) {
  using Kind = ParseError::Kind;
  TsplibHeader header;
  std::optional<std::size_t> dimension;
  const auto lines = split_lines(text);

  std::size_t section_line = 0;
  std::size_t ln = 0;
  for (; ln < lines.size(); ++ln) {
    const std::string_view line = trim(lines[ln]);
    if (line.empty()) continue;
    if (line == "EOF") break;
    const auto colon = line.find(':');
    const std::string_view key = trim(line.substr(0, colon));
    if (key == "NODE_COORD_SECTION") {
      section_line = ln + 1;
      break;
    }
    if (colon == std::string_view::npos) continue;
    const std::string_view value = trim(line.substr(colon + 1));
    if (key == "NAME") {
      header.name = value;
    } else if (key == "TYPE") {
      header.type = value;
    } else if (key == "COMMENT") {
      header.comment = value;
    } else if (key == "EDGE_WEIGHT_TYPE") {
      header.edge_weight_type = value;
    } else if (key == "DIMENSION") {
      dimension = parse_count(value);
      if (!dimension || *dimension == 0) {
        throw ParseError(Kind::BadHeaderValue, ln + 1,
                         "DIMENSION must be a positive integer, got '" + std::string(value) + "'");
      }
    }
  }

  if (!dimension) {
    throw ParseError(Kind::MissingDimension, section_line, "missing DIMENSION header");
  }
  header.dimension = *dimension;

  std::vector<std::optional<Point>> slots(*dimension);
  std::size_t rows = 0;
  std::size_t last_line = section_line;
  if (section_line != 0) {
    for (ln = section_line; ln < lines.size(); ++ln) {
      const std::string_view line = trim(lines[ln]);
      if (line.empty()) continue;
      const auto fields = split_fields(line, false);
      if (fields[0] == "EOF" || is_section_keyword(fields[0])) break;
      last_line = ln + 1;
      if (fields.size() != 3) {
        throw ParseError(Kind::MalformedRow, ln + 1,
                         "expected '<index> <x> <y>', got '" + std::string(line) + "'");
      }
      const auto index = parse_count(fields[0]);
      if (!index) {
        throw ParseError(Kind::MalformedRow, ln + 1,
                         "node index '" + std::string(fields[0]) + "' is not a positive integer");
      }
      if (*index < 1 || *index > *dimension) {
        throw ParseError(Kind::IndexOutOfRange, ln + 1,
                         "node index " + std::to_string(*index) + " outside 1.." +
                             std::to_string(*dimension));
      }
      const auto x = parse_real(fields[1]);
      const auto y = parse_real(fields[2]);
      if (!x || !y) {
        throw ParseError(Kind::BadCoordinate, ln + 1,
                         "unparseable coordinate in '" + std::string(line) + "'");
      }
      auto& slot = slots[*index - 1];
      if (slot) {
        throw ParseError(Kind::DuplicateIndex, ln + 1,
                         "duplicate node index " + std::to_string(*index));
      }
      slot = Point{*x, *y};
      ++rows;
    }
  }

  if (rows != *dimension) {
    throw ParseError(Kind::RowCountMismatch, last_line,
                     "DIMENSION is " + std::to_string(*dimension) + " but " +
                         std::to_string(rows) + " coordinate rows were read");
  }

  std::vector<Point> points;
  points.reserve(slots.size());
  for (const auto& slot : slots) points.push_back(*slot);
  std::string name = header.name.empty() ? "unnamed" : header.name;
  return TsplibDocument{std::move(header), Instance(std::move(name), std::move(points), metric)};
}

Instance parse_coord_list(std::string_view text, std::string name, Metric metric) {
  using Kind = ParseError::Kind;
  std::vector<Point> points;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = trim(lines[ln]);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line, true);
    if (fields.size() != 2) {
      throw ParseError(Kind::MalformedRow, ln + 1,
                       "expected 'x y' or 'x,y', got '" + std::string(line) + "'");
    }
    const auto x = parse_real(fields[0]);
    const auto y = parse_real(fields[1]);
    if (!x || !y) {
      throw ParseError(Kind::BadCoordinate, ln + 1,
                       "non-numeric coordinate in '" + std::string(line) + "'");
    }
    points.push_back({*x, *y});
  }
  if (points.size() < 2) {
    throw ParseError(Kind::TooFewPoints, 0,
                     "coordinate list has " + std::to_string(points.size()) +
                         " points; at least 2 are required");
  }
  return Instance(std::move(name), std::move(points), metric);
}

bool looks_like_tsplib(std::string_view text) {
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    return std::isalpha(static_cast<unsigned char>(line.front())) != 0;
  }
  return false;
}

std::string format_tsplib(const Instance& instance, std::string_view edge_weight_type) {
  std::ostringstream out;
  out << "NAME : " << instance.name() << '\n';
  out << "TYPE : TSP\n";
  out << "DIMENSION : " << instance.size() << '\n';
  out << "EDGE_WEIGHT_TYPE : " << edge_weight_type << '\n';
  out << "NODE_COORD_SECTION\n";
  const auto points = instance.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << (i + 1) << ' ' << format_real(points[i].x) << ' ' << format_real(points[i].y) << '\n';
  }
  out << "EOF\n";
  return out.str();
}

Instance load_instance_text(std::string_view text, std::string name, Metric metric) {
  if (looks_like_tsplib(text)) return parse_tsplib(text, metric).instance;
  return parse_coord_list(text, std::move(name), metric);
}

Instance load_instance(const std::filesystem::path& path, Metric metric) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError(ParseError::Kind::Unreadable, 0, "cannot open " + path.string());
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return load_instance_text(text, path == "-" ? "stdin" : path.stem().string(), metric);
}

}  // namespace tourlab
