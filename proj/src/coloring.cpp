#include "aec/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "aec/io.hpp"

namespace aec {

std::string to_string(ColorSet s) {
  std::string out = "{";
  bool first = true;
  for (Color c : s.to_vector()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

ImproperColoringError::ImproperColoringError(Vertex v, Color c)
    : std::logic_error("coloring is improper: color " + std::to_string(c) + " repeats at vertex " +
                       std::to_string(v)),
      vertex_(v),
      color_(c) {}

EdgeColoring::EdgeColoring(int kappa, int num_edges) : EdgeColoring(kappa, std::vector<Color>(num_edges, kUncolored)) {}

EdgeColoring::EdgeColoring(int kappa, std::vector<Color> colors) : kappa_(kappa), colors_(std::move(colors)) {
  if (kappa_ < 1 || kappa_ > kMaxColors) {
    throw std::invalid_argument("kappa must lie in 1.." + std::to_string(kMaxColors));
  }
  for (Color c : colors_) {
    if (c < 0 || c > kappa_) throw std::invalid_argument("color " + std::to_string(c) + " outside 0..kappa");
  }
}

bool EdgeColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

int EdgeColoring::colored_count() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kUncolored; }));
}

void EdgeColoring::assign(EdgeId e, Color c) {
  if (c < 1 || c > kappa_) {
    throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." + std::to_string(kappa_));
  }
  colors_.at(e) = c;
}

namespace {

void require_matching(const Graph& g, const EdgeColoring& c) {
  if (c.num_edges() != g.num_edges()) {
    throw std::invalid_argument("coloring covers " + std::to_string(c.num_edges()) + " edges, graph has " +
                                std::to_string(g.num_edges()));
  }
}

// The edge of color `col` at x, if any. Throws when there are two.
std::optional<Graph::Incidence> edge_with(const Graph& g, const EdgeColoring& c, Vertex x, Color col) {
  std::optional<Graph::Incidence> found;
  for (const auto& inc : g.incident(x)) {
    if (c.color(inc.edge) != col) continue;
    if (found) throw ImproperColoringError(x, col);
    found = inc;
  }
  return found;
}

struct Walk {
  std::vector<Vertex> vertices;  // excludes the start
  std::vector<EdgeId> edges;
  Color last = kUncolored;
  bool returned = false;
};

// Follows first, other, first, ... from start until stuck or back at start.
Walk walk(const Graph& g, const EdgeColoring& c, Vertex start, Color first, Color other) {
  Walk w;
  Vertex x = start;
  Color col = first;
  while (auto inc = edge_with(g, c, x, col)) {
    w.edges.push_back(inc->edge);
    w.last = col;
    if (inc->neighbor == start) {
      w.returned = true;
      break;
    }
    w.vertices.push_back(inc->neighbor);
    x = inc->neighbor;
    col = col == first ? other : first;
  }
  return w;
}

void require_distinct(Color alpha, Color beta) {
  if (alpha == beta) throw std::invalid_argument("dichromatic queries need two distinct colors");
  if (alpha < 1 || beta < 1) throw std::invalid_argument("colors are 1-based");
}

}  // namespace

ColorSet used_colors(const Graph& g, const EdgeColoring& c, Vertex v) {
  require_matching(g, c);
  ColorSet s;
  for (const auto& inc : g.incident(v)) {
    if (c.is_colored(inc.edge)) s.insert(c.color(inc.edge));
  }
  return s;
}

ColorSet free_colors(const Graph& g, const EdgeColoring& c, Vertex v) {
  return ColorSet::range(c.kappa()) - used_colors(g, c, v);
}

ColorSet upsilon(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  auto e = g.find_edge(u, v);
  if (!e) throw std::invalid_argument(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  if (!c.is_colored(*e)) throw std::invalid_argument("upsilon needs a colored edge");
  ColorSet s = used_colors(g, c, v);
  s.erase(c.color(*e));
  return s;
}

std::vector<Vertex> w_set(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  const ColorSet ups = upsilon(g, c, u, v);
  std::vector<Vertex> out;
  for (const auto& inc : g.incident(u)) {
    if (c.is_colored(inc.edge) && ups.contains(c.color(inc.edge))) out.push_back(inc.neighbor);
  }
  return out;
}

PathQuery maximal_dichromatic_path(const Graph& g, const EdgeColoring& c, Vertex v, Color alpha, Color beta) {
  require_matching(g, c);
  require_distinct(alpha, beta);
  PathQuery q;
  q.alpha = alpha;
  q.beta = beta;
  q.origin = v;

  const bool has_alpha = edge_with(g, c, v, alpha).has_value();
  const bool has_beta = edge_with(g, c, v, beta).has_value();
  if (!has_alpha && !has_beta) {
    q.vertices = {v};
    return q;
  }
  const Color first = has_alpha ? alpha : beta;
  const Color second = has_alpha ? beta : alpha;

  Walk a = walk(g, c, v, first, second);
  if (a.returned) {
    q.closed = true;
    q.vertices.push_back(v);
    q.vertices.insert(q.vertices.end(), a.vertices.begin(), a.vertices.end());
    q.edges = std::move(a.edges);
    return q;
  }
  Walk b = walk(g, c, v, second, first);
  q.vertices.assign(a.vertices.rbegin(), a.vertices.rend());
  q.vertices.push_back(v);
  q.vertices.insert(q.vertices.end(), b.vertices.begin(), b.vertices.end());
  q.edges.assign(a.edges.rbegin(), a.edges.rend());
  q.edges.insert(q.edges.end(), b.edges.begin(), b.edges.end());
  return q;
}

bool exists_critical_path(const Graph& g, const EdgeColoring& c, Color alpha, Color beta, Vertex u, Vertex v) {
  require_matching(g, c);
  require_distinct(alpha, beta);
  if (u == v) return false;
  if (!edge_with(g, c, u, alpha) || edge_with(g, c, u, beta)) return false;
  Walk w = walk(g, c, u, alpha, beta);
  return !w.returned && !w.vertices.empty() && w.vertices.back() == v && w.last == alpha;
}

bool exists_alternating_path(const Graph& g, const EdgeColoring& c, Color alpha, Color beta, Vertex u, Vertex v) {
  require_matching(g, c);
  require_distinct(alpha, beta);
  if (u == v) return false;
  Walk w = walk(g, c, u, alpha, beta);
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (w.vertices[i] == v) return c.color(w.edges[i]) == beta;
  }
  return false;
}

ColorSet candidate_colors(const Graph& g, const EdgeColoring& c, EdgeId e) {
  require_matching(g, c);
  if (c.is_colored(e)) throw std::invalid_argument("edge " + std::to_string(e) + " is already colored");
  const auto [u, v] = g.edge(e);
  return ColorSet::range(c.kappa()) - (used_colors(g, c, u) | used_colors(g, c, v));
}

ColorSet valid_colors(const Graph& g, const EdgeColoring& c, EdgeId e) {
  candidate_colors(g, c, e);
  if (!acyclic_so_far(g, c).ok) throw std::invalid_argument("valid_colors needs an acyclic partial coloring");
  return detail::valid_colors_unchecked(g, c, e);
}

namespace detail {

ColorSet valid_colors_unchecked(const Graph& g, const EdgeColoring& c, EdgeId e) {
  const ColorSet candidates = candidate_colors(g, c, e);
  const auto [u, v] = g.edge(e);
  const ColorSet common = used_colors(g, c, u) & used_colors(g, c, v);
  ColorSet valid;
  for (Color alpha : candidates.to_vector()) {
    bool closes = false;
    for (Color beta : common.to_vector()) {
      // u and v both end (alpha, beta) components via beta; alpha on uv would
      // close a cycle exactly when they end the same one.
      Walk w = walk(g, c, u, beta, alpha);
      if (!w.vertices.empty() && w.vertices.back() == v) {
        closes = true;
        break;
      }
    }
    if (!closes) valid.insert(alpha);
  }
  return valid;
}

}  // namespace detail

std::optional<ProperViolation> find_improper(const Graph& g, const EdgeColoring& c) {
  require_matching(g, c);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ColorSet seen;
    for (const auto& inc : g.incident(v)) {
      Color col = c.color(inc.edge);
      if (col == kUncolored) continue;
      if (seen.contains(col)) return ProperViolation{v, col};
      seen.insert(col);
    }
  }
  return std::nullopt;
}

bool is_proper(const Graph& g, const EdgeColoring& c) { return !find_improper(g, c).has_value(); }

AcyclicityVerdict acyclic_so_far(const Graph& g, const EdgeColoring& c) {
  AcyclicityVerdict verdict;
  if (auto bad = find_improper(g, c)) {
    verdict.ok = false;
    verdict.improper = bad;
    return verdict;
  }
  ColorSet present;
  for (Color col : c.colors()) {
    if (col != kUncolored) present.insert(col);
  }
  const auto colors = present.to_vector();
  std::vector<Vertex> parent(g.num_vertices());
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = i + 1; j < colors.size(); ++j) {
      std::iota(parent.begin(), parent.end(), 0);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Color col = c.color(e);
        if (col != colors[i] && col != colors[j]) continue;
        const Vertex a = find(g.edge(e).u);
        const Vertex b = find(g.edge(e).v);
        if (a != b) {
          parent[a] = b;
          continue;
        }
        PathQuery q = maximal_dichromatic_path(g, c, g.edge(e).u, colors[i], colors[j]);
        verdict.ok = false;
        verdict.cycle = std::move(q.edges);
        return verdict;
      }
    }
  }
  return verdict;
}

AcyclicityVerdict verify_acyclic(const Graph& g, const EdgeColoring& c) {
  require_matching(g, c);
  if (!c.is_total()) throw std::invalid_argument("verify_acyclic needs a total coloring");
  return acyclic_so_far(g, c);
}

EdgeColoring swap_colors(const EdgeColoring& c, EdgeId e1, EdgeId e2) {
  if (!c.is_colored(e1) || !c.is_colored(e2)) throw std::invalid_argument("swap_colors needs two colored edges");
  EdgeColoring out = c;
  out.assign(e1, c.color(e2));
  out.assign(e2, c.color(e1));
  return out;
}

std::string write_coloring(const Graph& g, const EdgeColoring& c) {
  require_matching(g, c);
  std::string out = "k " + std::to_string(c.kappa()) + "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out += std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) + " " + std::to_string(c.color(e)) + "\n";
  }
  return out;
}

EdgeColoring parse_coloring(const Graph& g, std::string_view text) {
  std::optional<int> kappa;
  std::vector<Color> colors(g.num_edges(), kUncolored);
  std::vector<bool> listed(g.num_edges(), false);
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto parse_int = [&](std::string_view tok, std::size_t col) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(ParseErrorKind::malformed, line_no, col, "'" + std::string(tok) + "' is not an integer");
    }
    return value;
  };

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start), start);
    }
    if (tokens.empty()) continue;

    if (!kappa) {
      if (tokens.size() != 2 || tokens[0].first != "k") {
        throw ParseError(ParseErrorKind::malformed, line_no, tokens[0].second, "expected header 'k <kappa>'");
      }
      int k = parse_int(tokens[1].first, tokens[1].second);
      if (k < 1 || k > kMaxColors) {
        throw ParseError(ParseErrorKind::color_out_of_range, line_no, tokens[1].second,
                         "kappa must lie in 1.." + std::to_string(kMaxColors));
      }
      kappa = k;
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(ParseErrorKind::malformed, line_no, tokens[0].second, "expected 'u v color'");
    }
    const int u = parse_int(tokens[0].first, tokens[0].second);
    const int v = parse_int(tokens[1].first, tokens[1].second);
    const int col = parse_int(tokens[2].first, tokens[2].second);
    std::optional<EdgeId> e;
    if (u >= 0 && v >= 0 && u < g.num_vertices() && v < g.num_vertices()) e = g.find_edge(u, v);
    if (!e) {
      throw ParseError(ParseErrorKind::unknown_edge, line_no, tokens[0].second,
                       std::to_string(u) + "-" + std::to_string(v) + " is not an edge of the graph");
    }
    if (listed[*e]) {
      throw ParseError(ParseErrorKind::duplicate_edge, line_no, tokens[0].second,
                       "edge " + std::to_string(u) + "-" + std::to_string(v) + " listed twice");
    }
    if (col < 0 || col > *kappa) {
      throw ParseError(ParseErrorKind::color_out_of_range, line_no, tokens[2].second,
                       "color " + std::to_string(col) + " outside 0.." + std::to_string(*kappa));
    }
    listed[*e] = true;
    colors[*e] = col;
  }
  if (!kappa) throw ParseError(ParseErrorKind::truncated, line_no, 0, "missing 'k <kappa>' header");
  return EdgeColoring(*kappa, std::move(colors));
}

}  // namespace aec
