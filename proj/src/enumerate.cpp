#include "aec/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace aec {

namespace {

constexpr int kMaxN = kCanonicalVertexLimit;

using Adjacency = std::array<std::uint32_t, kMaxN>;

Adjacency adjacency_of(const Graph& g) {
  Adjacency adj{};
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

// Stable color refinement. Labels are ranks of signatures, so they do not
// depend on the input labeling.
std::vector<int> refine(const Adjacency& adj, int n) {
  std::vector<int> label(n, 0);
  int classes = 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(label[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if ((adj[v] >> w) & 1) nb.push_back(label[w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) label[v] = rank[sig[v]];
    if (r == classes) return label;
    classes = r;
  }
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g) : n_(g.num_vertices()), adj_(adjacency_of(g)) {
    if (n_ > kMaxN) throw std::invalid_argument("canonical form supports at most " + std::to_string(kMaxN) + " vertices");
    label_ = refine(adj_, n_);
    cell_of_position_ = label_;
    std::sort(cell_of_position_.begin(), cell_of_position_.end());
    total_bits_ = n_ * (n_ - 1) / 2;
  }

  void run() {
    std::uint32_t unused = n_ == 0 ? 0 : (n_ >= 32 ? ~0u : (1u << n_) - 1);
    order_.assign(n_, 0);
    extend(0, 0, unused);
  }

  std::uint64_t code() const { return best_code_; }
  const std::vector<Vertex>& order() const { return best_order_; }

 private:
  bool twins(int a, int b) const {
    const std::uint32_t mask = ~((1u << a) | (1u << b));
    return (adj_[a] & mask) == (adj_[b] & mask);
  }

  void extend(int pos, std::uint64_t prefix, std::uint32_t unused) {
    if (pos == n_) {
      if (!found_ || prefix > best_code_) {
        found_ = true;
        best_code_ = prefix;
        best_order_ = order_;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (!((unused >> v) & 1) || label_[v] != cell_of_position_[pos]) continue;
      // swapping twins is an automorphism, so one representative suffices
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = (next << 1) | ((adj_[order_[i]] >> v) & 1);
      if (found_) {
        const int bits = pos * (pos + 1) / 2;
        const std::uint64_t best_prefix = bits == 0 ? 0 : best_code_ >> (total_bits_ - bits);
        if (next < best_prefix) continue;
      }
      order_[pos] = v;
      extend(pos + 1, next, unused & ~(1u << v));
    }
  }

  int n_;
  Adjacency adj_;
  std::vector<int> label_;
  std::vector<int> cell_of_position_;
  int total_bits_ = 0;
  std::vector<Vertex> order_;
  bool found_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_order_;
};

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Graph::Edge> edges;
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  CanonicalSearch s(g);
  s.run();
  return s.code();
}

Graph canonical_form(const Graph& g) {
  return graph_from_code(g.num_vertices(), canonical_code(g));
}

namespace {

void keep(const Graph& g, const EnumerationOptions& options, std::vector<Graph>& out) {
  if (options.connected_only && !is_connected(g)) return;
  if (options.filter && !options.filter(g)) return;
  out.push_back(g);
}

std::vector<Graph> enumerate_labeled(const EnumerationOptions& options) {
  std::vector<Graph> out;
  for (int n = options.min_n; n <= options.max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      keep(graph_from_code(n, code), options, out);
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(const EnumerationOptions& options) {
  if (options.min_n < 1 || options.max_n < options.min_n) throw std::invalid_argument("bad vertex range");
  const int cap = options.dedup ? (options.allow_large ? kMaxN : kEnumerationDefaultCap)
                                : (options.allow_large ? 7 : 6);
  if (options.max_n > cap) {
    throw std::invalid_argument("enumeration beyond " + std::to_string(cap) + " vertices" +
                                (options.allow_large ? " is not supported" : " needs allow_large"));
  }
  if (!options.dedup) return enumerate_labeled(options);

  // Every connected graph on n >= 2 vertices has a vertex whose removal
  // leaves it connected, so growing connected graphs by one vertex with a
  // nonempty neighborhood reaches them all.
  std::vector<Graph> out;
  std::set<std::uint64_t> level{0};  // the one-vertex graph
  for (int n = 1;; ++n) {
    if (n >= options.min_n) {
      for (std::uint64_t code : level) keep(graph_from_code(n, code), options, out);
    }
    if (n == options.max_n) break;
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(n, code);
      const std::uint32_t first = options.connected_only ? 1 : 0;
      for (std::uint32_t nbrs = first; nbrs < (1u << n); ++nbrs) {
        std::vector<Graph::Edge> edges(base.edges().begin(), base.edges().end());
        for (int v = 0; v < n; ++v) {
          if ((nbrs >> v) & 1) edges.push_back({v, n});
        }
        next.insert(canonical_code(Graph(n + 1, std::move(edges))));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace aec
