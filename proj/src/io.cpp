#include "aec/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

namespace aec {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed: return "malformed";
    case ParseErrorKind::self_loop: return "self-loop";
    case ParseErrorKind::duplicate_edge: return "duplicate-edge";
    case ParseErrorKind::bad_character: return "bad-character";
    case ParseErrorKind::truncated: return "truncated";
    case ParseErrorKind::unknown_edge: return "unknown-edge";
    case ParseErrorKind::color_out_of_range: return "color-out-of-range";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t offset, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " +
                         to_string(kind) + ": " + what),
      kind_(kind),
      line_(line),
      offset_(offset) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits a line into whitespace-separated tokens, remembering each token's column.
std::vector<std::pair<std::string_view, std::size_t>> tokenize(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start), start);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Graph::Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  int n = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(ParseErrorKind::malformed, line_no, tokens.front().second,
                       "expected two vertex ids, got " + std::to_string(tokens.size()) + " tokens");
    }
    Vertex ids[2];
    for (int k = 0; k < 2; ++k) {
      auto [tok, col] = tokens[k];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ids[k]);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || ids[k] < 0) {
        throw ParseError(ParseErrorKind::malformed, line_no, col,
                         "'" + std::string(tok) + "' is not a non-negative integer");
      }
    }
    if (ids[0] == ids[1]) {
      throw ParseError(ParseErrorKind::self_loop, line_no, tokens[0].second,
                       "self-loop at vertex " + std::to_string(ids[0]));
    }
    if (!seen.emplace(std::min(ids[0], ids[1]), std::max(ids[0], ids[1])).second) {
      throw ParseError(ParseErrorKind::duplicate_edge, line_no, tokens[0].second,
                       "duplicate edge " + std::to_string(ids[0]) + " " + std::to_string(ids[1]));
    }
    edges.push_back({ids[0], ids[1]});
    n = std::max({n, ids[0] + 1, ids[1] + 1});
  }
  return Graph(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  if (line.substr(0, header.size()) == header) pos = header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  auto next = [&](const char* what) -> int {
    if (pos >= line.size()) throw ParseError(ParseErrorKind::truncated, 1, pos, std::string("missing ") + what);
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) {
      throw ParseError(ParseErrorKind::bad_character, 1, pos,
                       "byte " + std::to_string(c) + " outside the printable range 63..126");
    }
    ++pos;
    return c - 63;
  };

  long long n = 0;
  int first = next("vertex count");
  if (first < 63) {
    n = first;
  } else {
    int second = next("vertex count");
    int groups = 3;
    if (second == 63) {
      groups = 6;
      second = next("vertex count");
    }
    n = second;
    for (int k = 1; k < groups; ++k) n = (n << 6) | next("vertex count");
  }
  if (n > (1 << 20)) throw ParseError(ParseErrorKind::malformed, 1, 0, "vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  const std::size_t body_start = pos;
  if (static_cast<long long>(line.size() - pos) < bytes) {
    throw ParseError(ParseErrorKind::truncated, 1, line.size(),
                     "expected " + std::to_string(bytes) + " adjacency bytes");
  }
  std::vector<Graph::Edge> edges;
  long long k = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) current = next("adjacency");
      if (current & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0 && (current & ((1 << (6 - bits % 6)) - 1)) != 0) {
    throw ParseError(ParseErrorKind::malformed, 1, pos - 1, "nonzero padding bits");
  }
  if (pos != line.size()) {
    throw ParseError(ParseErrorKind::malformed, 1, pos,
                     "trailing data after " + std::to_string(pos - body_start) + " adjacency bytes");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const long long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<bool> adj(static_cast<std::size_t>(bits), false);
  for (const auto& e : g.edges()) {
    long long i = std::min(e.u, e.v);
    long long j = std::max(e.u, e.v);
    adj[static_cast<std::size_t>(j * (j - 1) / 2 + i)] = true;
  }
  for (long long k = 0; k < bits; k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) {
      value <<= 1;
      if (k + b < bits && adj[static_cast<std::size_t>(k + b)]) value |= 1;
    }
    out += static_cast<char>(value + 63);
  }
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& err) {
      throw ParseError(err.kind(), line_no, err.offset(), err.what());
    }
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  auto graphs = parse_graph6_lines(text);
  if (graphs.size() != 1) {
    throw ParseError(ParseErrorKind::malformed, 1, 0,
                     "expected exactly one graph6 line, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

std::string write_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::edge_list) return write_edge_list(g);
  return write_graph6(g) + "\n";
}

GraphFormat format_for_path(std::string_view path) {
  constexpr std::string_view ext = ".g6";
  if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext) return GraphFormat::graph6;
  return GraphFormat::edge_list;
}

}  // namespace aec
