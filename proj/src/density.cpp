#include "aec/density.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace aec {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::uint32_t best_subset(const Graph& g, Rational* value) {
  const int n = g.num_vertices();
  if (n == 0) throw std::domain_error("max_average_degree of the empty graph");
  if (n > kMadVertexLimit) {
    throw std::domain_error("exhaustive mad is limited to " + std::to_string(kMadVertexLimit) + " vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  // best density so far is best_twice_edges / best_size
  long long best_twice_edges = 0;
  long long best_size = 1;
  std::uint32_t best_set = 1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    long long twice_edges = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      twice_edges += std::popcount(adj[std::countr_zero(rest)] & s);
    }
    const long long size = std::popcount(s);
    if (twice_edges * best_size > best_twice_edges * size) {
      best_twice_edges = twice_edges;
      best_size = size;
      best_set = s;
    }
  }
  if (value) *value = Rational(best_twice_edges, best_size);
  return best_set;
}

}  // namespace

Rational max_average_degree(const Graph& g) {
  Rational value;
  best_subset(g, &value);
  return value;
}

std::vector<Vertex> densest_vertex_set(const Graph& g) {
  const std::uint32_t set = best_subset(g, nullptr);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if ((set >> v) & 1) out.push_back(v);
  }
  return out;
}

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::low: return "low";
    case VertexClass::two: return "two";
    case VertexClass::special_three: return "special-3";
    case VertexClass::normal_three: return "normal-3";
    case VertexClass::four: return "four";
    case VertexClass::five: return "five";
    case VertexClass::six_plus: return "six-plus";
  }
  return "unknown";
}

std::vector<VertexClass> classify_vertices(const Graph& g, int kappa) {
  std::vector<VertexClass> out(g.num_vertices(), VertexClass::low);
  if (g.num_vertices() == 0) return out;
  const int special_degree = kappa - g.max_degree() + 2;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    switch (g.degree(v)) {
      case 0:
      case 1: out[v] = VertexClass::low; break;
      case 2: out[v] = VertexClass::two; break;
      case 3: {
        bool special = false;
        for (const auto& inc : g.incident(v)) special = special || g.degree(inc.neighbor) == special_degree;
        out[v] = special ? VertexClass::special_three : VertexClass::normal_three;
        break;
      }
      case 4: out[v] = VertexClass::four; break;
      case 5: out[v] = VertexClass::five; break;
      default: out[v] = VertexClass::six_plus; break;
    }
  }
  return out;
}

Rational ChargeLedger::total_initial() const {
  Rational sum = 0;
  for (const auto& c : initial) sum += c;
  return sum;
}

Rational ChargeLedger::total_final() const {
  Rational sum = 0;
  for (const auto& c : final_charge) sum += c;
  return sum;
}

std::vector<Vertex> ChargeLedger::negative_vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < final_charge.size(); ++v) {
    if (final_charge[v] < 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

ChargeLedger discharge_mad4(const Graph& g, int kappa) {
  ChargeLedger ledger;
  const auto classes = classify_vertices(g, kappa);
  for (Vertex v = 0; v < g.num_vertices(); ++v) ledger.initial.emplace_back(g.degree(v) - 4);
  ledger.final_charge = ledger.initial;

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Rational amount = 0;
    int donor_degree = 0;
    const char* rule = "";
    switch (classes[v]) {
      case VertexClass::two: amount = 1; donor_degree = 6; rule = "R1"; break;
      case VertexClass::special_three: amount = Rational(1, 2); donor_degree = 5; rule = "R2"; break;
      case VertexClass::normal_three: amount = Rational(1, 3); donor_degree = 5; rule = "R3"; break;
      default: continue;
    }
    for (const auto& inc : g.incident(v)) {
      if (g.degree(inc.neighbor) < donor_degree) continue;
      ledger.transfers.push_back({inc.neighbor, v, amount, rule});
      ledger.final_charge[inc.neighbor] -= amount;
      ledger.final_charge[v] += amount;
    }
  }
  return ledger;
}

}  // namespace aec
