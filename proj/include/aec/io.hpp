#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

enum class GraphFormat { edge_list, graph6 };

enum class ParseErrorKind {
  malformed,
  self_loop,
  duplicate_edge,
  bad_character,
  truncated,
  unknown_edge,
  color_out_of_range,
};

const char* to_string(ParseErrorKind kind);

/// Input rejected by one of the text parsers. `line` is 1-based; `offset` is the
/// 0-based byte offset within that line (graph6) or the whole input.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t offset, const std::string& what);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t offset_;
};

Graph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

/// Edge list: one `u v` pair per line, `#` starts a comment, n = max id + 1.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Standard graph6 encoding, optionally preceded by the `>>graph6<<` header.
/// Edge ids follow the bit order: column j ascending, then row i < j.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Picks graph6 for `.g6` paths, edge list otherwise.
GraphFormat format_for_path(std::string_view path);

}  // namespace aec
