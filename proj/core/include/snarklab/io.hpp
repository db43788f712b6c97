#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

/// Malformed input. `line` is 1-based (0 when not applicable), `offset` is
/// the 0-based character position within the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int offset);
  int line() const { return line_; }
  int offset() const { return offset_; }

 private:
  int line_;
  int offset_;
};

std::string write_graph6(const MultiGraph& g);
/// Accepts an optional ">>graph6<<" header.
MultiGraph read_graph6(std::string_view text);

/// "n m" header followed by one "u v" line per edge.
std::string write_multi_text(const MultiGraph& g);
MultiGraph read_multi_text(std::string_view text);

enum class Format { graph6, multi_text };

/// One record of a catalogue file: either a graph or the error it produced.
struct Record {
  int line = 0;
  std::variant<MultiGraph, ParseError> value;
};

/// Splits a file into records. Files whose first significant line is an
/// "n m" pair are multi_text (records separated by their headers), otherwise
/// every non-empty line is a graph6 string. Lines starting with '#' are ignored.
std::vector<Record> read_catalogue(std::string_view text);
Format detect_format(std::string_view text);

std::string write_graph(const MultiGraph& g, Format f);

}  // namespace snarklab
