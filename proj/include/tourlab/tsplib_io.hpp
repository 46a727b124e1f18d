#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tourlab/core.hpp"

namespace tourlab {

struct TsplibHeader {
  std::string name;
  std::string type;
  std::string comment;
  std::size_t dimension = 0;
  /// Recorded verbatim (EUC_2D, ATT, ...). Does not select the metric.
  std::string edge_weight_type;
};

struct TsplibDocument {
  TsplibHeader header;
  Instance instance;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MissingDimension,
    BadHeaderValue,
    RowCountMismatch,
    DuplicateIndex,
    IndexOutOfRange,
    BadCoordinate,
    MalformedRow,
    TooFewPoints,
    Unreadable,
  };

  /// `line` is 1-based; 0 when the problem is not tied to one line.
  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Parses the TSPLIB subset: `KEY : value` header lines followed by a
/// NODE_COORD_SECTION of `<index> <x> <y>` rows (1-based indices) up to EOF
/// or end of input. Points land in index order under `metric`.
TsplibDocument parse_tsplib(std::string_view text, Metric metric = {});

/// Parses `x y` or `x,y` lines; blank lines and `#` comments are skipped.
/// At least two points are required.
Instance parse_coord_list(std::string_view text, std::string name, Metric metric = {});

/// True when the text looks like a TSPLIB document rather than a coordinate
/// list.
bool looks_like_tsplib(std::string_view text);

/// Serializes to TSPLIB with NODE_COORD_SECTION. Coordinates are written in
/// shortest round-trip form, so integer coordinates keep their exact text.
std::string format_tsplib(const Instance& instance, std::string_view edge_weight_type = "EUC_2D");

/// Reads a file (or standard input for "-") and auto-detects the format.
Instance load_instance(const std::filesystem::path& path, Metric metric = {});

/// Same, from text already in memory; `name` is used for coordinate lists.
Instance load_instance_text(std::string_view text, std::string name, Metric metric = {});

}  // namespace tourlab
