#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

/// Colors are 1..kappa; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kUncolored = 0;
inline constexpr int kMaxColors = 63;

/// Set of colors in 1..63, stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits & ~std::uint64_t{1}) {}

  /// {1, ..., kappa}
  static constexpr ColorSet range(int kappa) {
    return ColorSet(kappa >= 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (kappa + 1)) - 2));
  }
  static ColorSet of(std::initializer_list<Color> colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }

  constexpr bool contains(Color c) const { return c >= 1 && c <= 63 && (bits_ >> c) & 1; }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; 0 when empty.
  constexpr Color min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_); }

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

std::string to_string(ColorSet s);

/// Raised when an operation requires a proper coloring and finds two equally
/// colored edges meeting at a vertex.
class ImproperColoringError : public std::logic_error {
 public:
  ImproperColoringError(Vertex v, Color c);
  Vertex vertex() const { return vertex_; }
  Color color() const { return color_; }

 private:
  Vertex vertex_;
  Color color_;
};

/// Partial or total assignment of colors 1..kappa to edge ids. Properness is a
/// query, not an invariant.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int kappa, int num_edges);
  EdgeColoring(int kappa, std::vector<Color> colors);

  int kappa() const { return kappa_; }
  int num_edges() const { return static_cast<int>(colors_.size()); }
  Color color(EdgeId e) const { return colors_.at(e); }
  bool is_colored(EdgeId e) const { return color(e) != kUncolored; }
  bool is_total() const;
  int colored_count() const;
  const std::vector<Color>& colors() const { return colors_; }

  void assign(EdgeId e, Color c);
  void clear(EdgeId e) { colors_.at(e) = kUncolored; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int kappa_ = 0;
  std::vector<Color> colors_;
};

/// Result of walking the two-colored component through a vertex.
struct PathQuery {
  Color alpha = 0;
  Color beta = 0;
  Vertex origin = 0;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  bool closed = false;

  friend bool operator==(const PathQuery&, const PathQuery&) = default;
};

ColorSet used_colors(const Graph& g, const EdgeColoring& c, Vertex v);
ColorSet free_colors(const Graph& g, const EdgeColoring& c, Vertex v);

/// U(v) minus the color of uv. Not symmetric in u and v.
ColorSet upsilon(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

/// Neighbors w of u whose edge uw carries a color of upsilon(u, v).
std::vector<Vertex> w_set(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

/// The unique maximal (alpha, beta)-colored path or cycle through v.
/// Open paths are listed from the end reached first along v's alpha-edge (or
/// v's beta-edge when v has no alpha-edge); cycles start at v and leave along
/// the alpha-edge.
PathQuery maximal_dichromatic_path(const Graph& g, const EdgeColoring& c, Vertex v, Color alpha, Color beta);

/// A maximal (alpha, beta) path with ends u != v, whose edges at both u and v
/// are colored alpha.
bool exists_critical_path(const Graph& g, const EdgeColoring& c, Color alpha, Color beta, Vertex u, Vertex v);

/// An (alpha, beta)-colored path leaving u along alpha and entering v along beta.
bool exists_alternating_path(const Graph& g, const EdgeColoring& c, Color alpha, Color beta, Vertex u, Vertex v);

ColorSet candidate_colors(const Graph& g, const EdgeColoring& c, EdgeId e);
ColorSet valid_colors(const Graph& g, const EdgeColoring& c, EdgeId e);

namespace detail {
/// valid_colors without the acyclicity precondition check; for search loops
/// that maintain acyclicity themselves.
ColorSet valid_colors_unchecked(const Graph& g, const EdgeColoring& c, EdgeId e);
}  // namespace detail

struct ProperViolation {
  Vertex vertex;
  Color color;
};

struct AcyclicityVerdict {
  bool ok = true;
  std::optional<ProperViolation> improper;
  /// Edges of a bichromatic cycle, in cyclic order.
  std::optional<std::vector<EdgeId>> cycle;
};

std::optional<ProperViolation> find_improper(const Graph& g, const EdgeColoring& c);
bool is_proper(const Graph& g, const EdgeColoring& c);

/// Proper and free of bichromatic cycles among the colored edges.
AcyclicityVerdict acyclic_so_far(const Graph& g, const EdgeColoring& c);

/// Same check for total colorings; throws std::invalid_argument on a partial one.
AcyclicityVerdict verify_acyclic(const Graph& g, const EdgeColoring& c);

EdgeColoring swap_colors(const EdgeColoring& c, EdgeId e1, EdgeId e2);

/// Coloring file: `k <kappa>` header, then `u v c` per edge in edge-id order.
std::string write_coloring(const Graph& g, const EdgeColoring& c);

/// Lines may come in any order and name an edge as `u v` or `v u`; edges not
/// listed stay uncolored. Throws ParseError.
EdgeColoring parse_coloring(const Graph& g, std::string_view text);

}  // namespace aec
