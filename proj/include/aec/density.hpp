#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "aec/graph.hpp"

namespace aec {

using Rational = boost::rational<long long>;

/// "p/q" with q >= 1, e.g. "3/1".
std::string to_string(const Rational& r);

inline constexpr int kMadVertexLimit = 20;

/// Maximum over nonempty vertex sets S of 2|E(G[S])| / |S|. Induced subgraphs
/// suffice because adding edges on the same vertex set never lowers density.
/// Exhaustive; throws std::domain_error for n = 0 or n > kMadVertexLimit.
Rational max_average_degree(const Graph& g);

/// A vertex set attaining max_average_degree (the first in subset order).
std::vector<Vertex> densest_vertex_set(const Graph& g);

enum class VertexClass { low, two, special_three, normal_three, four, five, six_plus };

const char* to_string(VertexClass c);

/// A 3-vertex is special when it has a neighbor of degree exactly
/// kappa - Delta + 2, and normal otherwise. Degrees 0 and 1 map to `low`.
std::vector<VertexClass> classify_vertices(const Graph& g, int kappa);

struct ChargeTransfer {
  Vertex from;
  Vertex to;
  Rational amount;
  std::string rule;
};

struct ChargeLedger {
  std::vector<Rational> initial;
  std::vector<Rational> final_charge;
  std::vector<ChargeTransfer> transfers;

  Rational total_initial() const;
  Rational total_final() const;
  std::vector<Vertex> negative_vertices() const;
  bool all_nonnegative() const { return negative_vertices().empty(); }
};

/// Vertex charges start at deg(v) - 4 and move by
///   R1: a 2-vertex receives 1 from each 6+-neighbor,
///   R2: a special 3-vertex receives 1/2 from each 5+-neighbor,
///   R3: a normal 3-vertex receives 1/3 from each 5+-neighbor.
/// Special/normal are judged against the given kappa.
ChargeLedger discharge_mad4(const Graph& g, int kappa);

}  // namespace aec
